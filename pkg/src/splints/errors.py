"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the supported families, ranks, or structural preconditions."""


class CapacityError(RuntimeError):
    """Request exceeds a built-in size guard for exhaustive computation."""
