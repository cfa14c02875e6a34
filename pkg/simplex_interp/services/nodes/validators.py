import logging
from typing import Optional, Sequence

from simplex_interp.core.precision import NumericContext, get_context
from simplex_interp.models.interpolation import NodeSet

logger = logging.getLogger(__name__)


class NodeSetError(ValueError):
    """Conjunto de nodos no admisible. `rule` identifica la regla violada."""
    rule = "invalid_nodes"


class InvalidDegree(NodeSetError):
    rule = "invalid_degree"


class DuplicateNodes(NodeSetError):
    rule = "duplicate_nodes"


class NodeOutOfRange(NodeSetError):
    rule = "node_out_of_range"


class TooFewNodes(NodeSetError):
    rule = "too_few_nodes"


def check_degree(k: int) -> int:
    """
    Valida el grado de interpolación.

    Raises:
        InvalidDegree: Si k < 1 o no es entero
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise InvalidDegree(f"El grado debe ser un entero >= 1, se recibió {k!r}")
    return k


def validate(points: Sequence, num: Optional[NumericContext] = None) -> NodeSet:
    """
    Ordena y valida una lista de nodos.

    Args:
        points: Números o cadenas decimales
        num: Contexto numérico (por defecto el de la configuración)

    Returns:
        NodeSet: Nodos crecientes en [-1, 1] con k = len(points) - 1

    Raises:
        TooFewNodes: Menos de 2 nodos
        NodeOutOfRange: Algún nodo fuera de [-1, 1]
        DuplicateNodes: Nodos repetidos
    """
    num = num or get_context()
    values = sorted(num.mpf(p) for p in points)

    if len(values) < 2:
        raise TooFewNodes(f"Se requieren al menos 2 nodos, se recibieron {len(values)}")

    for x in values:
        if not -1 <= x <= 1:
            raise NodeOutOfRange(f"El nodo {num.nstr(x, 10)} está fuera de [-1, 1]")

    for left, right in zip(values, values[1:]):
        if not left < right:
            raise DuplicateNodes(f"El nodo {num.nstr(left, 10)} está repetido")

    logger.debug(f"[NODES] {len(values)} nodos validados a {num.bits} bits")
    return NodeSet(k=len(values) - 1, points=tuple(values), num=num)
