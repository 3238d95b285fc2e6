from .ResidualCheck import ResidualCheck


class ResidualChecks:
    """Ordered collection of ResidualCheck instances.

    Parameters
    ----------

    checks
      list of ResidualCheck (default: empty)

    title
      Optional title, displayed by ``to_text``.
    """

    def __init__(self, checks=None, title="residual checks"):
        """Initialize."""
        self.checks = [] if checks is None else list(checks)
        self.title = title

    def __iter__(self):
        """Iterate over checks."""
        return self.checks.__iter__()

    def __len__(self):
        """Return the number of checks."""
        return len(self.checks)

    def __getitem__(self, name):
        """Return the first check with the given name."""
        for check in self.checks:
            if check.check == name:
                return check
        raise KeyError(name)

    def add(self, check, value, tol, comparison="max", passes=None, message=None):
        """Create a ResidualCheck, append it, and return it."""
        new_check = ResidualCheck(
            check,
            value=value,
            tol=tol,
            comparison=comparison,
            passes=passes,
            message=message,
        )
        self.checks.append(new_check)
        return new_check

    def extend(self, checks, prefix=None):
        """Append all checks from another collection, optionally renaming
        them "prefix: name"."""
        for check in checks:
            if prefix is not None:
                check = ResidualCheck(
                    "%s: %s" % (prefix, check.check),
                    value=check.value,
                    tol=check.tol,
                    comparison=check.comparison,
                    passes=check.passes,
                    message=check.message,
                )
            self.checks.append(check)
        return self

    def all_checks_pass(self):
        """Return whether all checks pass."""
        return all([check.passes for check in self.checks])

    def max_residual(self):
        """Return the largest value among "max"-type checks (0 if none)."""
        values = [c.value for c in self.checks if c.comparison == "max"]
        return max(values) if values else 0.0

    def filter(self, check_filter):
        """Create a new instance with a subset of the checks.

        ``check_filter`` is either a function ``(check) => True/False``
        or one of "passing", "failing".
        """
        if isinstance(check_filter, str):
            check_filter = {
                "passing": lambda c: c.passes,
                "failing": lambda c: not c.passes,
            }[check_filter]
        return self.__class__(
            checks=[c for c in self.checks if check_filter(c)], title=self.title
        )

    def text_summary_message(self):
        """Return a short message summarizing the checks."""
        failing = self.filter("failing")
        if len(failing) == 0:
            return "SUCCESS - all %d %s pass" % (len(self), self.title)
        return "FAILURE: %d %s out of %d failed" % (
            len(failing),
            self.title,
            len(self),
        )

    def to_text(self):
        """Return a long representation of the checks list."""
        return (
            "\n".join(
                ["===> %s" % self.text_summary_message()]
                + [check.to_text() for check in self.checks]
            )
            + "\n\n"
        )

    def to_list(self):
        """Return the list of {check, value, tol, pass} records."""
        return [check.to_record() for check in self.checks]
