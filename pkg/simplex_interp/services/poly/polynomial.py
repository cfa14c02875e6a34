"""
Polinomios univariados en la base monomial a precisión configurable.
Responsabilidad única: aritmética de polinomios (suma, producto, derivada, división).
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from simplex_interp.core.precision import NumericContext, Scalar

logger = logging.getLogger(__name__)


class ZeroPolynomial(ValueError):
    """Operación no definida para el polinomio idénticamente nulo."""
    pass


@dataclass(frozen=True, eq=False)
class Polynomial:
    """
    Polinomio real con coeficientes de menor a mayor grado: coeffs[i] acompaña a x^i.

    Los ceros finales se eliminan al construir; el polinomio nulo tiene
    coeffs vacío y grado -inf.
    """
    coeffs: Tuple[Scalar, ...]
    num: NumericContext

    def __post_init__(self):
        values = [self.num.mpf(c) for c in self.coeffs]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))

    # ==================== CONSTRUCTORES ====================

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, num: NumericContext) -> "Polynomial":
        return cls(tuple(coeffs), num)

    @classmethod
    def constant(cls, value, num: NumericContext) -> "Polynomial":
        return cls((value,), num)

    @classmethod
    def identity(cls, num: NumericContext) -> "Polynomial":
        """El polinomio x."""
        return cls((0, 1), num)

    @classmethod
    def from_roots(cls, roots: Sequence, num: NumericContext, leading=1) -> "Polynomial":
        """Construye leading · Π (x - r)."""
        result = cls.constant(leading, num)
        for r in roots:
            result = result * cls((-num.mpf(r), 1), num)
        return result

    # ==================== PROPIEDADES ====================

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Scalar:
        if self.is_zero:
            raise ZeroPolynomial("El polinomio nulo no tiene coeficiente principal")
        return self.coeffs[-1]

    def max_abs_coeff(self) -> Scalar:
        if self.is_zero:
            return self.num.ctx.zero
        return max(abs(c) for c in self.coeffs)

    # ==================== ARITMÉTICA ====================

    def __call__(self, x) -> Scalar:
        return evaluate(self, x)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs), self.num)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        size = max(len(self.coeffs), len(other.coeffs))
        zero = self.num.ctx.zero
        a = self.coeffs + (zero,) * (size - len(self.coeffs))
        b = other.coeffs + (zero,) * (size - len(other.coeffs))
        return Polynomial(tuple(x + y for x, y in zip(a, b)), self.num)

    __radd__ = __add__

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            factor = self.num.mpf(other)
            return Polynomial(tuple(c * factor for c in self.coeffs), self.num)
        if self.is_zero or other.is_zero:
            return Polynomial((), self.num)
        zero = self.num.ctx.zero
        product = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return Polynomial(tuple(product), self.num)

    __rmul__ = __mul__

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0), self.num)

    def divmod(self, divisor: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        """
        División euclídea self = divisor·q + r con deg r < deg divisor.

        El resto se depura con chop() respecto a la escala del dividendo,
        de modo que las cancelaciones exactas no dejen coeficientes espurios.

        Raises:
            ZeroPolynomial: Si el divisor es nulo
        """
        if divisor.is_zero:
            raise ZeroPolynomial("División por el polinomio nulo")
        zero = self.num.ctx.zero
        remainder = list(self.coeffs)
        shift = len(remainder) - len(divisor.coeffs)
        if shift < 0:
            return Polynomial((), self.num), self
        quotient = [zero] * (shift + 1)
        lead = divisor.coeffs[-1]
        for i in range(shift, -1, -1):
            factor = remainder[i + len(divisor.coeffs) - 1] / lead
            quotient[i] = factor
            for j, c in enumerate(divisor.coeffs):
                remainder[i + j] -= factor * c
        remainder = remainder[: len(divisor.coeffs) - 1]
        scale = self.max_abs_coeff()
        rest = Polynomial(tuple(remainder), self.num).chop(scale=scale)
        return Polynomial(tuple(quotient), self.num), rest

    def chop(self, scale=None) -> "Polynomial":
        """
        Anula los coeficientes con |c| <= chop_eps · scale (por defecto, el mayor |c|).
        """
        if self.is_zero:
            return self
        if scale is None:
            scale = self.max_abs_coeff()
        threshold = self.num.chop_eps * scale
        return Polynomial(tuple(c if abs(c) > threshold else 0 for c in self.coeffs), self.num)

    def normalized(self) -> "Polynomial":
        """Múltiplo positivo con coeficiente máximo en valor absoluto igual a 1."""
        if self.is_zero:
            return self
        return self * (1 / self.max_abs_coeff())

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial.constant(other, self.num)

    def __repr__(self) -> str:
        terms = ", ".join(self.num.nstr(c, 8) for c in self.coeffs)
        return f"Polynomial([{terms}], bits={self.num.bits})"


def evaluate(p: Polynomial, x) -> Scalar:
    """
    Evalúa p(x) con el esquema de Horner de mpmath.

    Args:
        p: Polinomio
        x: Punto de evaluación

    Returns:
        Scalar: Σ coeffs[i]·x^i en el contexto de p
    """
    if p.is_zero:
        return p.num.ctx.zero
    return p.num.ctx.polyval(list(reversed(p.coeffs)), p.num.mpf(x))


def chebyshev_t(n: int, num: NumericContext) -> Polynomial:
    """
    Polinomio de Chebyshev de primera especie por la recurrencia
    T0 = 1, T1 = x, T(n+1) = 2x·T(n) - T(n-1).
    """
    if n < 0:
        raise ValueError(f"El grado del polinomio de Chebyshev debe ser >= 0: {n}")
    previous = Polynomial.constant(1, num)
    if n == 0:
        return previous
    current = Polynomial.identity(num)
    two_x = Polynomial((0, 2), num)
    for _ in range(n - 1):
        previous, current = current, two_x * current - previous
    return current
