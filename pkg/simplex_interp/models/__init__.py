from .interpolation import NodeSet, LagrangeBasis
from .analysis import (
    Witness,
    NormResult,
    XiResult,
    OnePointCertificate,
    InequalityReport,
    AnalysisReport,
)
from .optimization import (
    StartResult,
    OptimizationResult,
    TableKind,
    TableRow,
    TableArtifact,
    SandwichCheck,
)

__all__ = [
    "NodeSet",
    "LagrangeBasis",
    "Witness",
    "NormResult",
    "XiResult",
    "OnePointCertificate",
    "InequalityReport",
    "AnalysisReport",
    "StartResult",
    "OptimizationResult",
    "TableKind",
    "TableRow",
    "TableArtifact",
    "SandwichCheck",
]
