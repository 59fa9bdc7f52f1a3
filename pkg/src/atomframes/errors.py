"""Exception hierarchy shared across the toolkit.

Two families matter for callers: configuration/usage problems (rejected
before any computation, CLI exit code 2) and numerical failures detected
mid-computation (CLI exit code 3).
"""


class ToolkitError(Exception):
    """Base class for all atomframes errors."""


class UsageError(ToolkitError):
    """A call or configuration violates an operation's contract."""


class DomainError(UsageError):
    """A physical parameter is outside its admissible domain."""


class SizeError(UsageError):
    """A requested problem size exceeds the documented desk-scale limit."""


class NumericError(ToolkitError):
    """A numerical invariant failed during computation."""


class TruncationError(NumericError):
    """A grid is too small to hold the state it was asked to represent."""


class ResolutionError(NumericError):
    """A grid is too coarse to resolve the state it carries."""
