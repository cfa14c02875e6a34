"""
Coeficiente de absorción de la curva de momentos T([-1, 1]) por el símplex de
nodos S y coordenadas respecto de los símplices dilatados σS.
"""

import logging
from typing import List, Optional, Tuple

from simplex_interp.core.precision import Scalar
from simplex_interp.models.analysis import XiResult
from simplex_interp.models.interpolation import LagrangeBasis
from simplex_interp.services.basis import barycentric_coords
from simplex_interp.services.poly import max_on_interval

logger = logging.getLogger(__name__)


def negative_part_maxima(basis: LagrangeBasis) -> List[Tuple[Scalar, Scalar]]:
    """
    Para cada j, (argmax, max) de -λ_j en [-1, 1] (máximo certificado).
    """
    one = basis.num.ctx.one
    return [max_on_interval(-lam, -one, one) for lam in basis.lambdas]


def absorption_coefficient(basis: LagrangeBasis) -> XiResult:
    """
    ξ(T(Ω); S) = d · max_j max_x (-λ_j(x)) + 1.

    Si el máximo M no supera τ la curva está contenida en S y ξ = 1.
    Ante empates en M se reporta el menor índice j.

    Returns:
        XiResult: Valor, contención y el índice (1-based) y punto peor
    """
    num = basis.num
    maxima = negative_part_maxima(basis)

    m_value = max(m for _, m in maxima)
    # empates a τ: menor índice
    worst = next(j for j, (_, m) in enumerate(maxima) if m >= m_value - num.tau)
    worst_point = maxima[worst][0]

    if m_value <= num.tau:
        logger.debug(f"[ANALYSIS] T([-1,1]) contenida en S (k={basis.nodes.k})")
        return XiResult(value=num.ctx.one, contained=True, worst_index=worst + 1, worst_point=worst_point)

    value = basis.d * m_value + 1
    logger.debug(
        f"[ANALYSIS] ξ = {num.nstr(value, 12)} (k={basis.nodes.k}, "
        f"j={worst + 1}, x={num.nstr(worst_point, 8)})"
    )
    return XiResult(value=value, contained=False, worst_index=worst + 1, worst_point=worst_point)


# ============================================================================
# SÍMPLICES DILATADOS
# ============================================================================

def dilated_coords(basis: LagrangeBasis, x, sigma) -> Tuple[Scalar, ...]:
    """
    Coordenadas baricéntricas de T(x) respecto de σS (homotecia de razón σ
    centrada en el baricentro de S): (λ_j(x) + (σ-1)/d) / σ.
    """
    num = basis.num
    sigma = num.mpf(sigma)
    if sigma <= 0:
        raise ValueError("La razón de homotecia debe ser positiva")
    shift = (sigma - 1) / basis.d
    return tuple((c + shift) / sigma for c in barycentric_coords(basis, x))


def absorbs(basis: LagrangeBasis, sigma, xi: Optional[XiResult] = None) -> bool:
    """
    Indica si σS contiene a T([-1, 1]), es decir si min_j min_x λ_j(x) ≥ -(σ-1)/d.

    Args:
        basis: Base de Lagrange
        sigma: Razón de homotecia (σ ≥ 1)
        xi: Resultado de absorption_coefficient ya calculado (opcional)
    """
    num = basis.num
    sigma = num.mpf(sigma)
    xi = xi or absorption_coefficient(basis)
    worst_negative = (xi.value - 1) / basis.d
    return worst_negative <= (sigma - 1) / basis.d + num.tau


def dilated_vertices(basis: LagrangeBasis, sigma) -> List[Tuple[Scalar, ...]]:
    """Vértices de σS: c + σ(v - c), con c el baricentro de los vértices T(x_j)."""
    num = basis.num
    sigma = num.mpf(sigma)
    vertices = basis.nodes.vertices()
    centroid = [sum(v[i] for v in vertices) / basis.d for i in range(basis.nodes.k)]
    return [tuple(c + sigma * (vi - c) for vi, c in zip(v, centroid)) for v in vertices]
