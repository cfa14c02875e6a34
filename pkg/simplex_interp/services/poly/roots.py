"""
Aislamiento certificado de raíces reales y ubicación de extremos en un intervalo.
Responsabilidad única: contar raíces con secuencias de Sturm y refinarlas.
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple

from simplex_interp.core.precision import Scalar
from simplex_interp.services.poly.polynomial import Polynomial, ZeroPolynomial, evaluate

logger = logging.getLogger(__name__)

# Número máximo de desplazamientos al evitar que un punto de corte sea raíz
_MAX_NUDGES = 8


@dataclass(frozen=True)
class RootList:
    """Raíces reales distintas de un polinomio en [a, b], en orden creciente."""
    interval: Tuple[Scalar, Scalar]
    roots: Tuple[Scalar, ...]

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)


# ============================================================================
# SECUENCIAS DE STURM
# ============================================================================

def sturm_sequence(p: Polynomial) -> List[Polynomial]:
    """
    Secuencia de Sturm p0 = p, p1 = p', p(i+1) = -rem(p(i-1), p(i)).

    Cada término se normaliza por un factor positivo (no altera los signos)
    y los restos se depuran con chop() para que las cancelaciones exactas
    terminen la cadena. El último término es (un múltiplo de) mcd(p, p').

    Raises:
        ZeroPolynomial: Si p es nulo
    """
    p = p.chop()
    if p.is_zero:
        raise ZeroPolynomial("La secuencia de Sturm del polinomio nulo no está definida")
    chain = [p.normalized()]
    derivative = p.derivative().chop()
    if derivative.is_zero:
        return chain
    chain.append(derivative.normalized())
    while chain[-1].degree > 0:
        _, remainder = chain[-2].divmod(chain[-1])
        if remainder.is_zero:
            break
        chain.append((-remainder).normalized())
    return chain


def sign_variations(chain: List[Polynomial], x) -> int:
    """Cambios de signo de la secuencia evaluada en x, ignorando ceros."""
    signs = []
    for q in chain:
        value = evaluate(q, x)
        if value > 0:
            signs.append(1)
        elif value < 0:
            signs.append(-1)
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def count_distinct_roots(chain: List[Polynomial], lo, hi) -> int:
    """Número de raíces reales distintas en (lo, hi] (teorema de Sturm)."""
    return max(sign_variations(chain, lo) - sign_variations(chain, hi), 0)


# ============================================================================
# AISLAMIENTO Y REFINAMIENTO
# ============================================================================

def _nudge(p: Polynomial, x, step):
    """Desplaza x hasta que no sea raíz exacta de p."""
    for _ in range(_MAX_NUDGES):
        if evaluate(p, x) != 0:
            return x
        x = x + step
    return x


def _has_sign_change(p: Polynomial, lo, hi) -> bool:
    return evaluate(p, lo) * evaluate(p, hi) < 0


def _bisect_single(chain: List[Polynomial], lo, hi, width):
    """Bisección por conteo de Sturm de un intervalo con exactamente una raíz distinta."""
    while hi - lo > width:
        mid = (lo + hi) / 2
        if count_distinct_roots(chain, lo, mid) >= 1:
            hi = mid
        else:
            lo = mid
    return (lo + hi) / 2


def _refine(p: Polynomial, chain: List[Polynomial], lo, hi):
    """
    Refina la única raíz distinta de p en (lo, hi].

    Primero se usa el método de horquilla de mpmath (Anderson-Björck) sobre p,
    o sobre su parte libre de cuadrados si la raíz es de multiplicidad par.
    El resultado se certifica con un cambio de signo en ±root_eps; si falla,
    se recurre a la bisección por conteo de Sturm.
    """
    num = p.num
    width = num.root_eps
    target = p
    if not _has_sign_change(target, lo, hi) and chain[-1].degree >= 1:
        target, _ = p.divmod(chain[-1])
    if _has_sign_change(target, lo, hi):
        try:
            root = num.ctx.findroot(lambda t: evaluate(target, t), (lo, hi), solver="anderson", verify=False)
            root = min(max(num.mpf(root), lo), hi)
            left, right = max(root - width, lo), min(root + width, hi)
            if evaluate(target, root) == 0 or _has_sign_change(target, left, right):
                return root
        except (ValueError, ZeroDivisionError) as e:
            logger.debug(f"[POLY] findroot no convergió en [{num.nstr(lo, 8)}, {num.nstr(hi, 8)}]: {e}")
    return _bisect_single(chain, lo, hi, width)


def roots_in_interval(p: Polynomial, a, b) -> RootList:
    """
    Raíces reales distintas de p en [a, b], certificadas por conteo de Sturm.

    La búsqueda se hace en (a - ε, b + ε] con ε = root_eps para no perder las
    raíces situadas exactamente en los extremos; luego se recortan a [a, b].
    Una raíz en (a - ε, a) se reporta en a aunque p(a) != 0 (igual en b): el
    resultado está certificado a ε_root, no más.

    Args:
        p: Polinomio no nulo
        a: Extremo izquierdo
        b: Extremo derecho (a < b)

    Returns:
        RootList: Raíces en orden creciente, multiplicidad colapsada

    Raises:
        ZeroPolynomial: Si p es idénticamente nulo
    """
    num = p.num
    a, b = num.mpf(a), num.mpf(b)
    if not a < b:
        raise ValueError("roots_in_interval requiere a < b")
    q = p.chop()
    if q.is_zero:
        raise ZeroPolynomial("El polinomio nulo no tiene raíces aisladas")
    if q.degree == 0:
        return RootList((a, b), ())

    chain = sturm_sequence(q)
    eps = num.root_eps
    lo = _nudge(q, a - eps, -eps)
    hi = _nudge(q, b + eps, eps)

    found = []
    pending = [(lo, hi, count_distinct_roots(chain, lo, hi))]
    while pending:
        left, right, count = pending.pop()
        if count == 0:
            continue
        if count == 1:
            found.append(_refine(q, chain, left, right))
            continue
        if right - left <= eps:
            # Raíces más próximas que root_eps: se colapsan en una sola
            found.append((left + right) / 2)
            continue
        mid = _nudge(q, (left + right) / 2, (right - left) / 64)
        pending.append((mid, right, count_distinct_roots(chain, mid, right)))
        pending.append((left, mid, count_distinct_roots(chain, left, mid)))

    # las raíces a menos de root_eps fuera de [a, b] se recortan al extremo
    roots = []
    for r in sorted(min(max(r, a), b) for r in found):
        if not roots or r - roots[-1] > eps:
            roots.append(r)
    logger.debug(f"[POLY] {len(roots)} raíces de grado {q.degree} en [{num.nstr(a, 6)}, {num.nstr(b, 6)}]")
    return RootList((a, b), tuple(roots))


# ============================================================================
# EXTREMOS
# ============================================================================

def critical_values(p: Polynomial, a, b) -> List[Tuple[Scalar, Scalar]]:
    """
    Candidatos a extremo de p en [a, b]: los extremos del intervalo y las
    raíces de p' dentro de él, con sus valores.

    Returns:
        List[Tuple[Scalar, Scalar]]: Pares (x, p(x)) en orden creciente de x
    """
    num = p.num
    a, b = num.mpf(a), num.mpf(b)
    if a == b:
        return [(a, evaluate(p, a))]
    points = [a, b]
    derivative = p.chop().derivative().chop()
    if derivative.degree >= 1:
        points.extend(roots_in_interval(derivative, a, b).roots)
    return [(x, evaluate(p, x)) for x in sorted(set(points))]


def max_on_interval(p: Polynomial, a, b) -> Tuple[Scalar, Scalar]:
    """
    Máximo certificado de p en [a, b].

    Returns:
        Tuple[Scalar, Scalar]: (argmax, max); ante empates, el menor testigo
    """
    num = p.num
    a, b = num.mpf(a), num.mpf(b)
    if a > b:
        raise ValueError("max_on_interval requiere a <= b")
    candidates = critical_values(p, a, b)
    best = max(value for _, value in candidates)
    witness = next(x for x, value in candidates if value == best)
    return witness, best
