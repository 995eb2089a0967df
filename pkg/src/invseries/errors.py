"""Exception hierarchy shared by every module and the CLI exit-code mapping."""


class InvSeriesError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(InvSeriesError, ValueError):
    """An operation was asked for a value outside its mathematical domain."""


class UsageError(InvSeriesError, ValueError):
    """Arguments are malformed or mutually inconsistent (e.g. order mismatch)."""


class ConsistencyError(InvSeriesError, ArithmeticError):
    """An internal exactness check failed; indicates a bug, never rounded away."""
