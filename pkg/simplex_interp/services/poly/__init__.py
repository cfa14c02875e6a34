"""
Módulo de polinomios: aritmética, aislamiento certificado de raíces y máximos en intervalos.
"""

from .polynomial import Polynomial, ZeroPolynomial, evaluate, chebyshev_t
from .roots import (
    RootList,
    sturm_sequence,
    count_distinct_roots,
    roots_in_interval,
    critical_values,
    max_on_interval,
)

__all__ = [
    "Polynomial",
    "ZeroPolynomial",
    "RootList",
    "evaluate",
    "chebyshev_t",
    "sturm_sequence",
    "count_distinct_roots",
    "roots_in_interval",
    "critical_values",
    "max_on_interval",
]
