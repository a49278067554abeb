class DomainError(ValueError):
    """An argument violates the precondition of an operation."""


class NoSolutionError(DomainError):
    """Bound inversion found no distance compatible with the requested rate."""


class DegenerateDenominatorError(DomainError):
    """The syndrome entropy vanishes over the whole search interval."""


class GuardExceededError(DomainError):
    """An exhaustive computation would exceed the desk-scale size guard."""
