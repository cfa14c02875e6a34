"""
Módulo de nodos de interpolación: construcción (regulares, Chebyshev) y validación.
"""

from .validators import (
    NodeSetError,
    InvalidDegree,
    DuplicateNodes,
    NodeOutOfRange,
    TooFewNodes,
    check_degree,
    validate,
)
from .builders import regular_nodes, chebyshev_nodes

__all__ = [
    "NodeSetError",
    "InvalidDegree",
    "DuplicateNodes",
    "NodeOutOfRange",
    "TooFewNodes",
    "check_degree",
    "validate",
    "regular_nodes",
    "chebyshev_nodes",
]
