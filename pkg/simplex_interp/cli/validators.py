import logging
from typing import Optional, Tuple

from pydantic import ValidationError

from simplex_interp.core.precision import NumericContext
from simplex_interp.models.interpolation import NodeSet
from simplex_interp.schemas.node_schema import NodeListSchema
from simplex_interp.schemas.optimizer_schema import OptimizerConfig
from simplex_interp.services.nodes import NodeSetError, chebyshev_nodes, regular_nodes, validate

logger = logging.getLogger(__name__)


class CliValidators:
    """
    Responsabilidad única: Validaciones de los argumentos de la CLI.
    Encapsula la lógica de validación usando los schemas Pydantic y services.nodes.
    """

    @staticmethod
    def validate_nodes(
        k: Optional[int],
        nodes: Optional[str],
        regular: bool,
        chebyshev: bool,
        num: NumericContext,
    ) -> Tuple[bool, str, Optional[NodeSet]]:
        """
        Resuelve la fuente de nodos: --nodes "a,b,c", o -k con --regular / --chebyshev.

        Args:
            k: Grado indicado con -k (obligatorio salvo con --nodes)
            nodes: Texto de la lista de nodos
            regular: Usar nodos regulares
            chebyshev: Usar nodos de Chebyshev
            num: Contexto numérico

        Returns:
            Tuple[bool, str, Optional[NodeSet]]: (is_valid, error_message, node_set)
        """
        sources = sum([nodes is not None, regular, chebyshev])
        if sources != 1:
            return (False, "Indique exactamente una fuente de nodos: --nodes, --regular o --chebyshev", None)

        try:
            if nodes is not None:
                schema = NodeListSchema(VcNodes=nodes)
                node_set = validate(schema.points(), num)
                if k is not None and k != node_set.k:
                    return (False, f"[invalid_degree] -k {k} no coincide con {node_set.d} nodos (k={node_set.k})", None)
            else:
                if k is None:
                    return (False, "[invalid_degree] Falta el grado -k", None)
                node_set = regular_nodes(k, num) if regular else chebyshev_nodes(k, num)
            logger.debug(f"[CLI] Nodos validados: k={node_set.k}")
            return (True, "", node_set)
        except ValidationError as e:
            error = e.errors()[0]
            logger.warning(f"[CLI] Nodos inválidos '{nodes}': {error['msg']}")
            return (False, f"[{error['type']}] {error['msg']}", None)
        except NodeSetError as e:
            logger.warning(f"[CLI] Nodos inválidos ({e.rule}): {e}")
            return (False, f"[{e.rule}] {e}", None)

    @staticmethod
    def validate_optimizer(**kwargs) -> Tuple[bool, str, Optional[OptimizerConfig]]:
        """
        Construye la configuración del optimizador.

        Returns:
            Tuple[bool, str, Optional[OptimizerConfig]]: (is_valid, error_message, config)
        """
        try:
            config = OptimizerConfig(**kwargs)
            return (True, "", config)
        except ValidationError as e:
            error = e.errors()[0]
            logger.warning(f"[CLI] Configuración inválida: {error['msg']}")
            return (False, f"[{error['type']}] {error['msg']}", None)
