"""Exception types shared across the package."""

from __future__ import annotations


class InputError(ValueError):
    """Bad input: malformed file, violated precondition, unknown point, size cap."""


class UltrametricError(InputError):
    """A distance table failed the ultrametric triangle inequality.

    Carries the full list of :class:`~ultragreedy.triple.Violation` records.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        lines = ", ".join(str(v) for v in self.violations[:5])
        extra = "" if len(self.violations) <= 5 else f" (+{len(self.violations) - 5} more)"
        super().__init__(f"{len(self.violations)} ultrametric violation(s): {lines}{extra}")


class SizeCapError(InputError):
    """An exhaustive operation was asked to run above its hard size cap."""


class NotMaximalError(InputError):
    """The given set does not attain the maximum perimeter for its size."""


class MathIntegrityError(RuntimeError):
    """A verified mathematical fact failed to hold.

    This never fires on a valid ultra triple; any occurrence is a bug in the
    implementation, not in the input.
    """
