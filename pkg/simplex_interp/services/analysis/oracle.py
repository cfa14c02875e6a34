"""
Cota inferior de ‖P‖ por muestreo de las coordenadas baricéntricas en una malla.
"""

import logging

import numpy as np
from numpy.polynomial import polynomial as P

from simplex_interp.core.precision import Scalar
from simplex_interp.models.interpolation import LagrangeBasis
from simplex_interp.services.analysis.norm import lebesgue_function

logger = logging.getLogger(__name__)

# Puntos de la malla que se reevalúan a la precisión de trabajo
REFINE_POINTS = 16


def norm_via_barycentric(basis: LagrangeBasis, samples: int) -> Scalar:
    """
    max Σ|λ_j(x)| sobre la malla uniforme de `samples` puntos de [-1, 1].

    La malla se criba en float64 y los mejores puntos se reevalúan a la
    precisión del contexto, por lo que el resultado es un valor exacto de la
    malla y nunca supera ‖P‖.

    Args:
        basis: Base de Lagrange
        samples: Número de puntos (≥ 2)

    Returns:
        Scalar: Cota inferior de la norma

    Raises:
        ValueError: Si samples < 2
    """
    if samples < 2:
        raise ValueError(f"Se requieren al menos 2 muestras, se recibieron {samples}")
    num = basis.num

    grid = np.linspace(-1.0, 1.0, samples)
    screened = np.zeros_like(grid)
    for lam in basis.lambdas:
        coeffs = np.array([float(c) for c in lam.coeffs], dtype=float)
        screened += np.abs(P.polyval(grid, coeffs))

    count = min(REFINE_POINTS, samples)
    best = np.argpartition(-screened, count - 1)[:count]
    value = max(
        lebesgue_function(basis, num.mpf(2 * int(i)) / (samples - 1) - 1)
        for i in sorted(best)
    )
    logger.debug(f"[ANALYSIS] Cota por malla ({samples} puntos): {num.nstr(value, 12)}")
    return value
