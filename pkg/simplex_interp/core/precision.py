import logging
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Any, Optional

import mpmath

from simplex_interp.core.config import get_settings

logger = logging.getLogger(__name__)

# Un número real de un contexto NumericContext (instancia de ctx.mpf)
Scalar = Any


@dataclass(frozen=True, eq=False)
class NumericContext:
    """
    Contexto de precisión binaria para todas las cantidades reales.
    Responsabilidad única: encapsular un MPContext privado y sus tolerancias.

    Cada precisión tiene su propio MPContext (nunca se modifica el contexto
    global `mpmath.mp`), por lo que los valores son seguros entre hilos.
    """
    bits: int
    ctx: Any

    @cached_property
    def tau(self) -> Scalar:
        """Tolerancia de signo (1e-30 a 256 bits)."""
        return self.ctx.mpf(10) ** (-round(30 * self.bits / 256))

    @cached_property
    def root_eps(self) -> Scalar:
        """Ancho máximo de los intervalos que aíslan raíces (1e-40 a 256 bits)."""
        return self.ctx.mpf(10) ** (-round(40 * self.bits / 256))

    @cached_property
    def chop_eps(self) -> Scalar:
        """Umbral relativo para descartar coeficientes despreciables."""
        return self.ctx.ldexp(1, -int(0.75 * self.bits))

    @cached_property
    def identity_tol(self) -> Scalar:
        """Tolerancia de identidades exactas (1e-20 a 256 bits)."""
        return self.ctx.mpf(10) ** (-round(20 * self.bits / 256))

    @cached_property
    def singular_threshold(self) -> Scalar:
        """|det(A)| por debajo de 10^-(bits·0.25·log10 2) se considera singular."""
        return self.ctx.mpf(10) ** (-(self.bits * 0.25 * math.log10(2)))

    def mpf(self, value) -> Scalar:
        """Convierte un número (o cadena decimal) a un real de este contexto."""
        if isinstance(value, str):
            return self.ctx.mpf(value.strip())
        return self.ctx.mpf(value)

    def nstr(self, value, digits: int) -> str:
        """Representación decimal con `digits` cifras significativas."""
        return self.ctx.nstr(value, digits)


@lru_cache(maxsize=None)
def _build_context(bits: int) -> NumericContext:
    ctx = mpmath.MPContext()
    ctx.prec = bits
    logger.debug(f"[PRECISION] Contexto creado con {bits} bits ({ctx.dps} dígitos)")
    return NumericContext(bits=bits, ctx=ctx)


def get_context(bits: Optional[int] = None) -> NumericContext:
    """
    Obtiene el contexto numérico para una precisión dada.

    Args:
        bits: Precisión binaria; None usa SIMPLEX_INTERP_PRECISION_BITS

    Returns:
        NumericContext: Contexto compartido (inmutable) para esa precisión
    """
    if bits is None:
        bits = get_settings().PRECISION_BITS
    if bits < 16:
        raise ValueError(f"La precisión debe ser al menos 16 bits, se recibió {bits}")
    return _build_context(int(bits))
