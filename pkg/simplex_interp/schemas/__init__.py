from .optimizer_schema import Objective, OptimizerConfig
from .node_schema import NodeListSchema
from .run_record_schema import RunRecord

__all__ = [
    "Objective",
    "OptimizerConfig",
    "NodeListSchema",
    "RunRecord",
]
