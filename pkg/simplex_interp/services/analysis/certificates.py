"""
Certificados de 1-punto y desigualdades entre ξ y ‖P‖.
"""

import logging
from typing import Optional

from simplex_interp.models.analysis import (
    InequalityReport,
    NormResult,
    OnePointCertificate,
    XiResult,
)
from simplex_interp.models.interpolation import LagrangeBasis
from simplex_interp.services.analysis.absorption import absorption_coefficient
from simplex_interp.services.analysis.norm import projector_norm

logger = logging.getLogger(__name__)

# Tolerancias de las desigualdades (absolutas)
EQUALITY_TOL = 1e-10
SANDWICH_TOL = 1e-12


class CertificateMismatch(ArithmeticError):
    """Existe un 1-punto pero la cota superior no se alcanza: precisión insuficiente."""
    pass


def find_one_point(basis: LagrangeBasis, norm: Optional[NormResult] = None) -> OnePointCertificate:
    """
    Busca, entre los maximizadores de Σ|λ_j|, el primero (menor x) con
    exactamente una coordenada menor que -τ. Las coordenadas en [-τ, τ]
    cuentan como no negativas.

    Args:
        basis: Base de Lagrange
        norm: Resultado de projector_norm ya calculado (opcional)

    Returns:
        OnePointCertificate: exists=False si ningún testigo califica
    """
    num = basis.num
    norm = norm or projector_norm(basis)
    for witness in norm.witnesses:
        negatives = [j for j, c in enumerate(witness.coords) if c < -num.tau]
        if len(negatives) == 1:
            logger.debug(
                f"[ANALYSIS] 1-punto en x={num.nstr(witness.x, 10)}, "
                f"λ_{negatives[0] + 1} < 0"
            )
            return OnePointCertificate(
                exists=True,
                x_star=witness.x,
                negative_index=negatives[0] + 1,
                coords=witness.coords,
            )
    return OnePointCertificate(exists=False)


def inequality_report(
    basis: LagrangeBasis,
    norm: Optional[NormResult] = None,
    xi: Optional[XiResult] = None,
    one_point: Optional[OnePointCertificate] = None,
) -> InequalityReport:
    """
    Cotas ½(1 + 1/(d-1))(‖P‖-1) + 1 ≤ ξ ≤ (d/2)(‖P‖-1) + 1.

    El cociente (ξ-1)/(‖P‖-1) se omite si ‖P‖ ≤ 1 + τ.

    Raises:
        CertificateMismatch: Si hay 1-punto y |ξ - cota superior| > 1e-10,
            o si ξ queda fuera de las cotas
    """
    num = basis.num
    norm = norm or projector_norm(basis)
    xi = xi or absorption_coefficient(basis)
    one_point = one_point or find_one_point(basis, norm)

    d = basis.d
    excess = norm.value - 1
    lower = (1 + num.ctx.one / (d - 1)) * excess / 2 + 1
    upper = num.mpf(d) / 2 * excess + 1
    residual = abs(xi.value - upper)
    ratio = (xi.value - 1) / excess if excess > num.tau else None
    right_equality = residual <= EQUALITY_TOL

    if not lower - SANDWICH_TOL <= xi.value <= upper + SANDWICH_TOL:
        raise CertificateMismatch(
            f"ξ = {num.nstr(xi.value, 15)} fuera de [{num.nstr(lower, 15)}, {num.nstr(upper, 15)}]"
        )
    if one_point.exists and not right_equality:
        raise CertificateMismatch(
            f"Existe 1-punto pero |ξ - cota superior| = {num.nstr(residual, 5)} "
            f"a {num.bits} bits (k={basis.nodes.k})"
        )

    return InequalityReport(
        lower=lower,
        xi=xi.value,
        upper=upper,
        right_equality=right_equality,
        residual=residual,
        ratio=ratio,
    )
