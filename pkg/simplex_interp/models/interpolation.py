from dataclasses import dataclass
from typing import List, Tuple

from simplex_interp.core.precision import NumericContext, Scalar
from simplex_interp.services.poly import Polynomial


@dataclass(frozen=True, eq=False)
class NodeSet:
    """
    Conjunto admisible de d = k+1 nodos estrictamente crecientes en [-1, 1].
    Se construye siempre a través de services.nodes (que valida los invariantes).
    """
    k: int
    points: Tuple[Scalar, ...]
    num: NumericContext

    @property
    def d(self) -> int:
        return self.k + 1

    def as_floats(self) -> List[float]:
        return [float(x) for x in self.points]

    def moment_point(self, x) -> Tuple[Scalar, ...]:
        """T(x) = (x, x², ..., x^k), punto de la curva de momentos."""
        x = self.num.mpf(x)
        return tuple(x ** i for i in range(1, self.k + 1))

    def vertices(self) -> List[Tuple[Scalar, ...]]:
        """Vértices T(x^(j)) del símplex de nodos."""
        return [self.moment_point(x) for x in self.points]


@dataclass(frozen=True, eq=False)
class LagrangeBasis:
    """
    Sistema de interpolación: matriz A (fila i = (1, x_i, ..., x_i^k)),
    su determinante Δ y los polinomios básicos de Lagrange λ_1..λ_d,
    cuyos coeficientes son las columnas de A⁻¹.
    """
    nodes: NodeSet
    matrix_a: Tuple[Tuple[Scalar, ...], ...]
    det: Scalar
    lambdas: Tuple[Polynomial, ...]

    @property
    def d(self) -> int:
        return self.nodes.d

    @property
    def num(self) -> NumericContext:
        return self.nodes.num
