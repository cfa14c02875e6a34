from typing import Any, Dict, Optional

from pydantic import BaseModel, Field

from simplex_interp.core.config import get_settings


class RunRecord(BaseModel):
    """Registro de una ejecución de la CLI: argumentos, resultado y metadatos."""
    command: str
    inputs: Dict[str, Any]
    outputs: Dict[str, Any]
    details: Optional[Dict[str, Any]] = None
    precision_bits: int
    wall_time_ms: Optional[float] = None
    artifact_version: str = Field(default_factory=lambda: get_settings().ARTIFACT_VERSION)
