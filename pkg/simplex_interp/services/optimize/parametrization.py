"""
Parametrización de conjuntos de nodos ordenados por logits de los huecos.

Los huecos entre nodos consecutivos son softmax(logits) (escalados a la
longitud 2 del segmento), por lo que cualquier vector real produce nodos
estrictamente crecientes sin penalizaciones.
"""

from dataclasses import dataclass

import numpy as np
from scipy.special import softmax


@dataclass(frozen=True)
class NodeParametrization:
    """
    Args:
        k: Grado (d = k+1 nodos)
        symmetric: Huecos simétricos respecto de 0
        fix_endpoints: Nodos extremos fijos en ±1 (k huecos); si no, k+2 huecos
    """
    k: int
    symmetric: bool = True
    fix_endpoints: bool = True

    @property
    def gap_count(self) -> int:
        return self.k if self.fix_endpoints else self.k + 2

    @property
    def _half(self) -> int:
        return (self.gap_count + 1) // 2

    @property
    def n_free(self) -> int:
        """Dimensión del espacio de búsqueda (el primer logit se fija en 0)."""
        return (self._half if self.symmetric else self.gap_count) - 1

    def full_logits(self, z: np.ndarray) -> np.ndarray:
        logits = np.concatenate(([0.0], np.asarray(z, dtype=float)))
        if not self.symmetric:
            return logits
        if self.gap_count % 2 == 0:
            return np.concatenate((logits, logits[::-1]))
        return np.concatenate((logits, logits[-2::-1]))

    def nodes(self, z: np.ndarray) -> np.ndarray:
        """Nodos crecientes en [-1, 1] correspondientes a los parámetros z."""
        gaps = 2.0 * softmax(self.full_logits(z))
        if self.fix_endpoints:
            x = np.concatenate(([-1.0], -1.0 + np.cumsum(gaps)))
            x[0], x[-1] = -1.0, 1.0
        else:
            x = -1.0 + np.cumsum(gaps)[:-1]
        if self.symmetric:
            x = 0.5 * (x - x[::-1])
        return x

    def encode(self, nodes: np.ndarray) -> np.ndarray:
        """Parámetros z de un conjunto de nodos (inverso de nodes() en su imagen)."""
        nodes = np.asarray(nodes, dtype=float)
        if self.fix_endpoints:
            gaps = np.diff(nodes)
        else:
            gaps = np.diff(np.concatenate(([-1.0], nodes, [1.0])))
        logits = np.log(gaps) - np.log(gaps[0])
        size = self._half if self.symmetric else self.gap_count
        return logits[1:size]


def initial_nodes(k: int, fix_endpoints: bool) -> np.ndarray:
    """
    Arranque 0: nodos de Chebyshev-Lobatto -cos(jπ/k) con extremos fijos,
    o ceros de T(k+1) con extremos libres.
    """
    if fix_endpoints:
        x = -np.cos(np.arange(k + 1) * np.pi / k)
        x[0], x[-1] = -1.0, 1.0
        return x
    return -np.cos((2 * np.arange(k + 1) + 1) * np.pi / (2 * (k + 1)))
