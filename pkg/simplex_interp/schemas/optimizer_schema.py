from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, field_validator
from pydantic_core import PydanticCustomError

from simplex_interp.core.config import get_settings

settings = get_settings()


class Objective(str, Enum):
    """Cantidad a minimizar sobre los conjuntos de nodos."""
    NORM = "norm"
    XI = "xi"


class OptimizerConfig(BaseModel):
    """Schema de configuración de la búsqueda multi-arranque"""
    model_config = ConfigDict(frozen=True)

    k: int
    objective: Objective = Objective.NORM
    symmetric: bool = True
    fix_endpoints: bool = True
    starts: int = settings.STARTS
    max_iters: int = settings.MAX_ITERS
    tol: float = settings.TOL
    rng_seed: int = settings.SEED
    restarts: int = 3
    step: float = 0.25
    spread: float = 0.5
    workers: int = settings.WORKERS
    precision_bits: Optional[int] = None

    @field_validator('k')
    def validate_degree(cls, v):
        if v < 1:
            raise PydanticCustomError(
                'invalid_degree',
                'El grado k debe ser al menos 1'
            )
        return v

    @field_validator('starts', 'max_iters', 'workers')
    def validate_positive_count(cls, v, info):
        if v < 1:
            raise PydanticCustomError(
                'invalid_count',
                '{field} debe ser al menos 1',
                {'field': info.field_name}
            )
        return v

    @field_validator('tol', 'step', 'spread')
    def validate_positive_real(cls, v, info):
        if not v > 0:
            raise PydanticCustomError(
                'invalid_tolerance',
                '{field} debe ser positivo',
                {'field': info.field_name}
            )
        return v

    @field_validator('rng_seed', 'restarts')
    def validate_non_negative(cls, v, info):
        if v < 0:
            raise PydanticCustomError(
                'invalid_seed',
                '{field} no puede ser negativo',
                {'field': info.field_name}
            )
        return v

    @field_validator('precision_bits')
    def validate_precision(cls, v):
        if v is not None and v < 16:
            raise PydanticCustomError(
                'invalid_precision',
                'La precisión debe ser al menos 16 bits'
            )
        return v
