from dataclasses import dataclass
from typing import Optional, Tuple

from simplex_interp.core.precision import Scalar


@dataclass(frozen=True)
class Witness:
    """Punto x donde se alcanza la norma y sus coordenadas baricéntricas λ(x)."""
    x: Scalar
    coords: Tuple[Scalar, ...]


@dataclass(frozen=True)
class NormResult:
    """‖P‖ = max Σ|λ_j(x)| sobre [-1, 1] y todos sus maximizadores."""
    value: Scalar
    witnesses: Tuple[Witness, ...]


@dataclass(frozen=True)
class XiResult:
    """Coeficiente de absorción ξ(T(Ω); S) de la curva de momentos por el símplex de nodos."""
    value: Scalar
    contained: bool
    worst_index: int          # 1-based
    worst_point: Scalar


@dataclass(frozen=True)
class OnePointCertificate:
    """Punto de norma máxima con una única coordenada baricéntrica negativa."""
    exists: bool
    x_star: Optional[Scalar] = None
    negative_index: Optional[int] = None     # 1-based
    coords: Optional[Tuple[Scalar, ...]] = None


@dataclass(frozen=True)
class InequalityReport:
    """Cotas inferior y superior de ξ en términos de ‖P‖ y el cociente (ξ-1)/(‖P‖-1)."""
    lower: Scalar
    xi: Scalar
    upper: Scalar
    right_equality: bool
    residual: Scalar
    ratio: Optional[Scalar] = None


@dataclass(frozen=True)
class AnalysisReport:
    """Resumen completo del análisis de un conjunto de nodos."""
    k: int
    norm: NormResult
    xi: XiResult
    one_point: OnePointCertificate
    inequalities: InequalityReport
    abs_det: Scalar
