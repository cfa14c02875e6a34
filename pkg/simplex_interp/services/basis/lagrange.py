"""
Sistema de interpolación de grado k: matriz A, determinante Δ y polinomios
básicos de Lagrange λ_j.

Responsabilidad única: invertir A a la precisión de trabajo y exponer las
coordenadas baricéntricas λ(x) del punto T(x) respecto del símplex de nodos.
"""

import logging
from typing import Tuple

from simplex_interp.core.precision import Scalar
from simplex_interp.models.interpolation import LagrangeBasis, NodeSet
from simplex_interp.services.poly import Polynomial, evaluate

logger = logging.getLogger(__name__)


class SingularSystem(ArithmeticError):
    """El determinante de A es numéricamente nulo a la precisión actual."""
    pass


def vandermonde_det(nodes: NodeSet) -> Scalar:
    """
    Determinante por la fórmula del producto Π_{i<j} (x_j - x_i).

    Con nodos crecientes el resultado es siempre positivo.
    """
    ctx = nodes.num.ctx
    result = ctx.one
    points = nodes.points
    for j in range(nodes.d):
        for i in range(j):
            result *= points[j] - points[i]
    return result


def build(nodes: NodeSet) -> LagrangeBasis:
    """
    Construye A (fila i = (1, x_i, ..., x_i^k)), Δ = det(A) y λ_1..λ_d.

    Los coeficientes de λ_j son la columna j de A⁻¹ (factorización LU de
    mpmath a la precisión del NodeSet).

    Args:
        nodes: Conjunto de nodos validado

    Returns:
        LagrangeBasis: Sistema de interpolación

    Raises:
        SingularSystem: Si |Δ| < 10^-(bits·0.25·log10 2)
    """
    num = nodes.num
    ctx = num.ctx
    d = nodes.d

    rows = [[x ** j for j in range(d)] for x in nodes.points]
    matrix = ctx.matrix(rows)
    det = ctx.det(matrix)

    if abs(det) < num.singular_threshold:
        raise SingularSystem(
            f"|det(A)| = {num.nstr(abs(det), 6)} por debajo del umbral "
            f"{num.nstr(num.singular_threshold, 3)} a {num.bits} bits (k={nodes.k})"
        )

    inverse = ctx.inverse(matrix)
    lambdas = tuple(
        Polynomial(tuple(inverse[i, j] for i in range(d)), num)
        for j in range(d)
    )
    basis = LagrangeBasis(
        nodes=nodes,
        matrix_a=tuple(tuple(row) for row in rows),
        det=det,
        lambdas=lambdas,
    )

    unity_error, cardinal_error = identity_errors(basis)
    if unity_error > num.identity_tol or cardinal_error > num.identity_tol:
        logger.warning(
            f"[BASIS] Sistema mal condicionado k={nodes.k}: "
            f"error partición unidad {num.nstr(unity_error, 3)}, "
            f"error cardinalidad {num.nstr(cardinal_error, 3)}, "
            f"|det| = {num.nstr(abs(det), 6)}"
        )
    else:
        logger.debug(f"[BASIS] Base de Lagrange k={nodes.k}, det = {num.nstr(det, 10)}")
    return basis


def identity_errors(basis: LagrangeBasis) -> Tuple[Scalar, Scalar]:
    """
    Errores máximos de las identidades exactas de la base.

    Returns:
        Tuple[Scalar, Scalar]: (partición de la unidad como identidad de
        coeficientes Σλ_j = 1, cardinalidad λ_j(x_m) = δ_jm)
    """
    num = basis.num
    total = Polynomial((), num)
    for lam in basis.lambdas:
        total = total + lam
    expected = (num.ctx.one,) + (num.ctx.zero,) * basis.nodes.k
    padded = total.coeffs + (num.ctx.zero,) * (basis.d - len(total.coeffs))
    unity_error = max(abs(c - e) for c, e in zip(padded, expected))

    cardinal_error = num.ctx.zero
    for m, x in enumerate(basis.nodes.points):
        for j, lam in enumerate(basis.lambdas):
            target = 1 if j == m else 0
            cardinal_error = max(cardinal_error, abs(evaluate(lam, x) - target))
    return unity_error, cardinal_error


def barycentric_coords(basis: LagrangeBasis, x) -> Tuple[Scalar, ...]:
    """Coordenadas baricéntricas (λ_1(x), ..., λ_d(x)) de T(x) respecto del símplex de nodos."""
    x = basis.num.mpf(x)
    return tuple(evaluate(lam, x) for lam in basis.lambdas)
