import os

os.environ.setdefault("SIMPLEX_INTERP_LOG_TO_FILE", "false")

import numpy as np
import pytest

from simplex_interp.core.precision import get_context
from simplex_interp.services.basis import build
from simplex_interp.services.nodes import chebyshev_nodes, regular_nodes, validate

# Nodos interiores del proyector cúbico de norma mínima (truncados a 6 decimales)
MINIMAL_CUBIC = ["-1", "-0.417791", "0.417791", "1"]

PROPERTY_SAMPLES = int(os.getenv("SIMPLEX_INTERP_PROPERTY_SAMPLES", "12"))


@pytest.fixture
def num():
    return get_context(256)


@pytest.fixture
def quadratic_basis(num):
    return build(validate([-1, 0, 1], num))


@pytest.fixture
def regular_cubic(num):
    return build(regular_nodes(3, num))


@pytest.fixture
def chebyshev_cubic(num):
    return build(chebyshev_nodes(3, num))


@pytest.fixture
def minimal_cubic(num):
    return build(validate(MINIMAL_CUBIC, num))


def random_node_sets(k: int, count: int, seed: int = 2024, min_gap: float = 0.02, bits: int = 256):
    """
    Conjuntos de nodos aleatorios reproducibles con huecos de al menos min_gap.

    Se descartan los conjuntos cuyo |det(A)| = Π(x_j - x_i) queda por debajo del
    umbral de singularidad a `bits` bits: build() los rechazaría con SingularSystem.
    """
    rng = np.random.default_rng([seed, k])
    threshold = float(get_context(bits).singular_threshold)
    produced = 0
    while produced < count:
        points = np.sort(rng.uniform(-1.0, 1.0, k + 1))
        if np.min(np.diff(points)) < min_gap:
            continue
        gaps = points[None, :] - points[:, None]
        if np.prod(gaps[np.triu_indices(k + 1, 1)]) < 2 * threshold:
            continue
        produced += 1
        yield points
