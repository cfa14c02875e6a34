"""
Versión float64 (numpy) de ‖P‖ y ξ para la búsqueda local.

Mismo algoritmo por tramos que services.analysis pero sin certificación:
los puntos de corte son los nodos (raíces de las λ_j) y en cada tramo se
toman las raíces reales de la derivada. Solo guía la búsqueda; el valor
reportado se recalcula siempre con las rutinas certificadas.
"""

import numpy as np
from numpy.polynomial import polynomial as P

# Valor devuelto para configuraciones degeneradas (nodos casi coincidentes)
PENALTY = 1e6
MIN_GAP = 1e-8
IMAG_TOL = 1e-6


def lagrange_coefficients(nodes: np.ndarray) -> np.ndarray:
    """Matriz (k+1)×d cuya columna j son los coeficientes (de menor a mayor grado) de λ_j."""
    return np.linalg.inv(np.vander(nodes, increasing=True))


def _real_roots(coeffs: np.ndarray, a: float, b: float) -> np.ndarray:
    coeffs = P.polytrim(coeffs)
    if len(coeffs) < 2:
        return np.empty(0)
    roots = P.polyroots(coeffs)
    real = roots[np.abs(roots.imag) < IMAG_TOL].real
    return real[(real > a) & (real < b)]


def _degenerate(nodes: np.ndarray) -> bool:
    return len(nodes) > 1 and np.min(np.diff(nodes)) < MIN_GAP


def norm_value(nodes: np.ndarray) -> float:
    """max Σ|λ_j(x)| en [-1, 1] en doble precisión."""
    nodes = np.asarray(nodes, dtype=float)
    if _degenerate(nodes):
        return PENALTY
    coefs = lagrange_coefficients(nodes)
    cuts = np.unique(np.concatenate(([-1.0, 1.0], nodes)))

    best = 0.0
    for a, b in zip(cuts[:-1], cuts[1:]):
        signs = np.sign(P.polyval(0.5 * (a + b), coefs))
        piece = coefs @ signs
        xs = np.concatenate(([a, b], _real_roots(P.polyder(piece), a, b)))
        values = np.abs(P.polyval(xs, coefs)).sum(axis=0)
        best = max(best, float(values.max()))
    return best if np.isfinite(best) else PENALTY


def xi_value(nodes: np.ndarray) -> float:
    """d · max_j max_x (-λ_j(x)) + 1 en doble precisión (1 si no hay parte negativa)."""
    nodes = np.asarray(nodes, dtype=float)
    if _degenerate(nodes):
        return PENALTY
    coefs = lagrange_coefficients(nodes)
    d = len(nodes)

    worst = 0.0
    for j in range(d):
        lam = coefs[:, j]
        xs = np.concatenate(([-1.0, 1.0], _real_roots(P.polyder(lam), -1.0, 1.0)))
        worst = max(worst, float(np.max(-P.polyval(xs, lam))))
    value = d * worst + 1
    return value if np.isfinite(value) else PENALTY


OBJECTIVES = {
    "norm": norm_value,
    "xi": xi_value,
}
