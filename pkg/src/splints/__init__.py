"""Exact tools for splints of root systems."""

from .errors import CapacityError, DomainError
from .rootsys import PositiveRootSet, build_positive_roots

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "DomainError",
    "PositiveRootSet",
    "build_positive_roots",
    "__version__",
]
