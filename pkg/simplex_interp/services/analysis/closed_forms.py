"""
Fórmulas cerradas del caso cuadrático con nodos simétricos {-r, 0, r}.
"""

from typing import Optional, Tuple

from simplex_interp.core.precision import NumericContext, Scalar, get_context


class InvalidRadius(ValueError):
    """El radio r de los nodos {-r, 0, r} debe cumplir 0 < r ≤ 1."""
    pass


def _radius(r, num: Optional[NumericContext]) -> Tuple[Scalar, NumericContext]:
    num = num or get_context()
    r = num.mpf(r)
    if not 0 < r <= 1:
        raise InvalidRadius(f"El radio debe cumplir 0 < r <= 1, se recibió {num.nstr(r, 10)}")
    return r, num


def quadratic_closed_form(r, num: Optional[NumericContext] = None) -> Tuple[Scalar, Scalar]:
    """
    (ξ, ‖P‖) = (max(11/8, 3/r² - 2), max(5/4, 2/r² - 1)).

    Raises:
        InvalidRadius: Si r ≤ 0 o r > 1
    """
    r, num = _radius(r, num)
    xi = max(num.mpf(11) / 8, 3 / r ** 2 - 2)
    norm = max(num.mpf(5) / 4, 2 / r ** 2 - 1)
    return xi, norm


def quadratic_extremal_points(r, num: Optional[NumericContext] = None) -> Tuple[Scalar, ...]:
    """
    Únicas abscisas donde puede alcanzarse ‖P‖ o ξ para nodos {-r, 0, r}:
    los extremos ±1 y ±r/2 (tangente a la parábola paralela a un lado del triángulo).
    """
    r, num = _radius(r, num)
    one = num.ctx.one
    return (-one, -r / 2, r / 2, one)
