"""Exception hierarchy; the CLI maps each class to its own exit code."""


class ArrangementError(Exception):
    exit_code = 1


class InvalidInputError(ArrangementError, ValueError):
    """Malformed or invariant-violating input (exit code 2)."""

    exit_code = 2


class UnsupportedRangeError(ArrangementError, ValueError):
    """Valid input outside what the requested method supports (exit code 3)."""

    exit_code = 3


class BudgetExceededError(UnsupportedRangeError):
    """The instance is larger than the configured vertex budget."""


class ConsistencyError(ArrangementError, RuntimeError):
    """An internal cross-check failed; indicates a bug, not bad input (exit code 4)."""

    exit_code = 4
