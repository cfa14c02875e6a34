from dataclasses import dataclass, field
from enum import IntEnum
from typing import List, Optional, Tuple

from simplex_interp.core.precision import Scalar
from simplex_interp.models.analysis import AnalysisReport
from simplex_interp.models.interpolation import NodeSet


@dataclass(frozen=True)
class StartResult:
    """Resultado de un arranque de la búsqueda local (en float64)."""
    index: int
    nodes: Tuple[float, ...]
    value: float
    evaluations: int
    success: bool


@dataclass(frozen=True)
class OptimizationResult:
    """
    Mejor conjunto de nodos encontrado. best_value es el objetivo
    recalculado con las rutinas certificadas sobre best_nodes.
    """
    best_nodes: NodeSet
    best_value: Scalar
    evaluations: int
    converged: bool
    history: Tuple[Tuple[int, float], ...]   # (arranque, mejor valor hasta ese arranque)
    companion: Optional[Scalar] = None        # ξ en el minimizador de ‖P‖ y viceversa
    report: Optional[AnalysisReport] = None


class TableKind(IntEnum):
    """Tablas reproducibles."""
    THETA = 1        # normas mínimas y ξ en el minimizador
    XI_MIN = 2       # coeficientes de absorción mínimos y ‖P‖ en el minimizador
    REGULAR = 3      # nodos regulares
    CHEBYSHEV = 4    # nodos de Chebyshev


@dataclass(frozen=True)
class TableRow:
    k: int
    value: Scalar
    companion: Scalar
    abs_det: Scalar
    nodes: NodeSet
    lower: Scalar
    upper: Scalar
    right_equality: bool
    one_point: bool
    minimal_certified: bool = False
    converged: bool = True


@dataclass(frozen=True)
class TableArtifact:
    kind: TableKind
    kmax: int
    rows: List[TableRow] = field(default_factory=list)


@dataclass(frozen=True)
class SandwichCheck:
    """Cotas de ξ_k en términos de θ_k y el cociente (ξ_k - 1)/(θ_k - 1)."""
    lower: Scalar
    xi: Scalar
    upper: Scalar
    holds: bool
    ratio: Optional[Scalar] = None
