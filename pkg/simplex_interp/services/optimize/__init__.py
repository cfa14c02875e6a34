"""
Módulo de optimización: estimación de normas mínimas y coeficientes de absorción mínimos.
"""

from .parametrization import NodeParametrization, initial_nodes
from .fast_objective import norm_value, xi_value
from .minimizer import minimize, run_start, start_point
from .tables import DEFAULT_KMAX, reproduce_table, optimum_sandwich

__all__ = [
    "NodeParametrization",
    "initial_nodes",
    "norm_value",
    "xi_value",
    "minimize",
    "run_start",
    "start_point",
    "DEFAULT_KMAX",
    "reproduce_table",
    "optimum_sandwich",
]
