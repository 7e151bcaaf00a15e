"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class DimensionError(ValueError):
    """Vector length does not match the operator dimension."""


class ResourceError(RuntimeError):
    """A resource guard (dimension cap, panel cap) was exceeded."""


class ConvergenceError(RuntimeError):
    """An iterative solver stopped before reaching the requested tolerance.

    The best available estimate is attached so callers can still use the
    partial result (for power iteration it remains a valid lower bound).
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result
