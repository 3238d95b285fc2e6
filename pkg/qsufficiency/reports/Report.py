"""Implements the Report class."""

import hashlib
import textwrap

from ..Tolerances import Tolerances
from ..ResidualCheck import ResidualChecks
from ..matcore import to_canonical_json
from ..version import __version__


def file_digest(path=None, content=None):
    """Return the MD5 hex digest of a file's bytes (or of ``content``)."""
    if content is None:
        with open(path, "rb") as f:
            content = f.read()
    return hashlib.md5(content).hexdigest()


class Report:
    """Outcome of one command: results, residual table and run settings.

    Examples
    --------

    >>> report = Report("minsuff", results={"dimension": 2}, checks=checks,
    >>>                 inputs_digest=file_digest("model.json"))
    >>> print(report.to_json())

    Parameters
    ----------

    command
      Name of the command which produced the report.

    results
      JSON-serializable dict of command-specific results.

    checks
      ResidualChecks backing the numerical claims of the results.

    seed
      Master seed of the run.

    tolerances
      The Tolerances in force (embedded in the report).

    inputs_digest
      MD5 digest of the input file bytes (None when there is no input).
    """

    def __init__(
        self, command, results=None, checks=None, seed=0, tolerances=None, inputs_digest=None
    ):
        """Initialize."""
        self.command = command
        self.results = {} if results is None else results
        self.checks = ResidualChecks(title="checks") if checks is None else checks
        self.seed = seed
        self.tolerances = Tolerances.from_any(tolerances)
        self.inputs_digest = inputs_digest

    @property
    def exit_code(self):
        """0 if all residual checks pass, else 1."""
        return 0 if self.checks.all_checks_pass() else 1

    def to_dict(self):
        return {
            "command": self.command,
            "version": __version__,
            "inputs_digest": self.inputs_digest,
            "seed": self.seed,
            "tolerances": self.tolerances.to_dict(),
            "results": self.results,
            "residual_table": self.checks.to_list(),
            "all_checks_pass": self.checks.all_checks_pass(),
        }

    def to_json(self):
        """Return the report as canonical JSON (byte-identical for identical
        inputs and seed)."""
        return to_canonical_json(self.to_dict()) + "\n"

    def _results_lines(self, data, indent=0):
        lines = []
        for key in sorted(data):
            value = data[key]
            if isinstance(value, dict):
                lines.append("%s%s:" % (" " * indent, key))
                lines.extend(self._results_lines(value, indent + 2))
            else:
                text = to_canonical_json(value, indent=None)
                if len(text) > 200:
                    text = text[:200] + "..."
                lines.append(
                    textwrap.fill(
                        "%s: %s" % (key, text),
                        width=79,
                        initial_indent=" " * indent,
                        subsequent_indent=" " * (indent + 4),
                    )
                )
        return lines

    def to_text(self):
        """Return a human-readable summary of the report."""
        header = [
            "qsufficiency %s - command: %s" % (__version__, self.command),
            "input digest: %s" % self.inputs_digest,
            "seed: %s" % self.seed,
            "",
            "RESULTS",
        ]
        return "\n".join(
            header + self._results_lines(self.results) + ["", self.checks.to_text()]
        )

    def __repr__(self):
        return "Report(%s, %s)" % (self.command, self.checks.text_summary_message())
