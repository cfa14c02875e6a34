"""
Norma del proyector de interpolación (constante de Lebesgue).

Responsabilidad única: maximizar exactamente L(x) = Σ|λ_j(x)| en [-1, 1]
por tramos en los que el patrón de signos de las λ_j es constante.
"""

import logging
from typing import List, Tuple

from simplex_interp.core.precision import Scalar
from simplex_interp.models.analysis import NormResult, Witness
from simplex_interp.models.interpolation import LagrangeBasis
from simplex_interp.services.basis import barycentric_coords
from simplex_interp.services.poly import Polynomial, critical_values, evaluate, roots_in_interval

logger = logging.getLogger(__name__)

# Tolerancia absoluta para considerar un candidato como maximizador global
WITNESS_TOL = 1e-12


def breakpoints(basis: LagrangeBasis) -> List[Scalar]:
    """
    Puntos de corte de [-1, 1]: raíces certificadas de todas las λ_j y los extremos ±1.
    """
    num = basis.num
    one = num.ctx.one
    interior = []
    for lam in basis.lambdas:
        interior.extend(r for r in roots_in_interval(lam, -one, one).roots if abs(r) < one - num.root_eps)

    merged = [-one]
    for x in sorted(interior):
        if x - merged[-1] > num.root_eps:
            merged.append(x)
    merged.append(one)
    return merged


def piece_polynomial(basis: LagrangeBasis, a, b) -> Polynomial:
    """Σ s_j λ_j con s_j el signo de λ_j en el punto medio de (a, b)."""
    mid = (a + b) / 2
    total = Polynomial((), basis.num)
    for lam in basis.lambdas:
        total = total + lam if evaluate(lam, mid) >= 0 else total - lam
    return total


def lebesgue_function(basis: LagrangeBasis, x) -> Scalar:
    """L(x) = Σ |λ_j(x)|."""
    return sum(abs(c) for c in barycentric_coords(basis, x))


def projector_norm(basis: LagrangeBasis) -> NormResult:
    """
    ‖P‖ = max Σ|λ_j(x)| sobre [-1, 1] con todos sus maximizadores.

    En cada tramo entre puntos de corte L coincide con un polinomio; sus
    candidatos (extremos del tramo y raíces de la derivada) se evalúan de
    nuevo como Σ|λ_j| y se toman todos los que quedan a WITNESS_TOL del máximo.

    Returns:
        NormResult: Valor y testigos en orden creciente
    """
    num = basis.num
    cuts = breakpoints(basis)

    candidates: List[Tuple[Scalar, Scalar]] = []
    for a, b in zip(cuts, cuts[1:]):
        piece = piece_polynomial(basis, a, b)
        for x, _ in critical_values(piece, a, b):
            candidates.append((x, lebesgue_function(basis, x)))

    value = max(v for _, v in candidates)
    witnesses = []
    for x, v in sorted(candidates, key=lambda item: item[0]):
        if value - v > WITNESS_TOL:
            continue
        if witnesses and x - witnesses[-1].x <= num.root_eps:
            continue
        witnesses.append(Witness(x=x, coords=barycentric_coords(basis, x)))

    logger.debug(
        f"[ANALYSIS] ‖P‖ = {num.nstr(value, 12)} (k={basis.nodes.k}, "
        f"{len(cuts) - 1} tramos, {len(witnesses)} testigos)"
    )
    return NormResult(value=value, witnesses=tuple(witnesses))
