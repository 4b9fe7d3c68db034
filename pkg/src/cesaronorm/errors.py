"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class PreconditionError(ValueError):
    """An input fails a documented precondition that was checked explicitly."""


class ConvergenceError(RuntimeError):
    """An iterative numerical procedure exhausted its budget above tolerance."""
