from typing import List

from pydantic import BaseModel, field_validator
from pydantic_core import PydanticCustomError


class NodeListSchema(BaseModel):
    """Schema para validar la lista de nodos recibida como texto "a,b,c" """
    VcNodes: str

    @field_validator('VcNodes')
    def validate_nodes(cls, v):
        v = v.strip()
        if not v:
            raise PydanticCustomError(
                'nodes_missing',
                'La lista de nodos es obligatoria'
            )
        parts = [p.strip() for p in v.split(',')]
        if any(not p for p in parts):
            raise PydanticCustomError(
                'nodes_invalid',
                'La lista de nodos contiene elementos vacíos'
            )
        for p in parts:
            try:
                float(p)
            except ValueError:
                raise PydanticCustomError(
                    'nodes_invalid',
                    'El nodo "{node}" no es un número decimal',
                    {'node': p}
                )
        return ','.join(parts)

    def points(self) -> List[str]:
        """Nodos como cadenas decimales (se convierten a la precisión de trabajo después)."""
        return self.VcNodes.split(',')
