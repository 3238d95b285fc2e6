# -*- coding: utf-8 -*-
"""Implements the ResidualCheck class

A ResidualCheck records the outcome of one numerical verification: the name
of the check, the measured residual, the tolerance it was compared to, and
whether it passes. Checks are grouped in ResidualChecks, which can filter
them, print them, or export them as report records.
"""

import textwrap

import numpy as np

from ..matcore import score_to_formatted_string


class ResidualCheck:
    """Store the outcome of one residual test.

    Examples
    --------

    >>> check = ResidualCheck("R rho R = X", value=3e-15, tol=1e-8)
    >>> check.passes
    True

    Parameters
    ----------

    check
      Name of the check, e.g. "star closed" or "omega positive".

    value
      The measured residual (or, for ``comparison="min"``, the measured
      quantity which should stay above ``tol``).

    tol
      The threshold.

    comparison
      Either "max" (passes when value <= tol) or "min" (passes when
      value >= tol).

    passes
      Force the pass status (for boolean checks). By default it is computed
      from value, tol and comparison.

    message
      Optional details displayed by ``to_text``.
    """

    def __init__(
        self, check, value, tol, comparison="max", passes=None, message=None
    ):
        """Initialize."""
        self.check = check
        self.value = float(value)
        self.tol = float(tol)
        self.comparison = comparison
        if passes is None:
            if np.isnan(self.value):
                passes = False
            elif comparison == "max":
                passes = self.value <= self.tol
            elif comparison == "min":
                passes = self.value >= self.tol
            else:
                raise ValueError("Unknown comparison: %s" % comparison)
        self.passes = bool(passes)
        self.message = self.default_message if message is None else message

    @property
    def default_message(self):
        """Return the default message for console/reports."""
        return "value %s, %s %s" % (
            score_to_formatted_string(self.value).strip(),
            "max" if self.comparison == "max" else "min",
            score_to_formatted_string(self.tol).strip(),
        )

    def to_record(self):
        """Return the {check, value, tol, pass} record used in reports."""
        return {
            "check": self.check,
            "value": self.value,
            "tol": self.tol,
            "pass": self.passes,
        }

    def to_text(self, wrapped=True):
        """Return a string representation of the check.

        Example output:

        >>> ✔PASS ┍ star closed
        >>>       │ value 3.2E-16, max 1.00E-08
        """
        message = self.message
        if wrapped:
            indent = 6 * " " + "│ "
            message = "\n".join(
                textwrap.wrap(
                    message,
                    width=80,
                    initial_indent=indent,
                    subsequent_indent=indent,
                )
            )
        return "{passes} ┍ {check}\n{message}".format(
            passes="✔PASS" if self.passes else " FAIL",
            check=self.check,
            message=message,
        )

    def __repr__(self):
        return "ResidualCheck(%s, %s)" % (
            self.check,
            "pass" if self.passes else "FAIL",
        )
