"""Exception types shared across the package."""


class TwoTermError(Exception):
    """Base class for all package errors."""


class DomainError(TwoTermError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class NoBoundStateError(DomainError):
    """The requested quantum numbers do not correspond to a bound state."""


class ConvergenceError(TwoTermError, RuntimeError):
    """A numerical procedure failed to converge within its budget."""


class UnsupportedConventionError(TwoTermError, ValueError):
    """The requested normalization convention is not defined for these parameters."""
