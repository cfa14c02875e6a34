import numpy as np
import pytest

from simplex_interp.core.precision import get_context
from simplex_interp.services.basis import (
    SingularSystem,
    barycentric_coords,
    build,
    identity_errors,
    vandermonde_det,
)
from simplex_interp.services.nodes import chebyshev_nodes, regular_nodes, validate
from simplex_interp.services.poly import Polynomial, evaluate

from tests.conftest import random_node_sets


def test_linear_basis(num):
    basis = build(validate([-1, 1], num))
    assert [float(c) for c in basis.lambdas[0].coeffs] == [0.5, -0.5]
    assert [float(c) for c in basis.lambdas[1].coeffs] == [0.5, 0.5]
    assert basis.det == 2


def test_regular_cubic_determinant(regular_cubic, num):
    expected = num.mpf(256) / 243
    assert abs(regular_cubic.det - expected) < 1e-60
    assert abs(vandermonde_det(regular_cubic.nodes) - expected) < 1e-60


def test_minimal_cubic_determinant_magnitude(minimal_cubic):
    assert abs(abs(minimal_cubic.det) - 1.138679) < 1e-6


@pytest.mark.parametrize("points, expected", [([-1, 1], 2), ([-1, 0, 1], 2)])
def test_vandermonde_product(num, points, expected):
    assert vandermonde_det(validate(points, num)) == expected


def test_matrix_rows_ascending(quadratic_basis):
    assert [[int(c) for c in row] for row in quadratic_basis.matrix_a] == [[1, -1, 1], [1, 0, 0], [1, 1, 1]]
    assert quadratic_basis.det > 0


def test_barycentric_coords_regular_cubic(regular_cubic):
    coords = barycentric_coords(regular_cubic, "-0.699055")
    expected = [0.360848, 0.890801, -0.315565, 0.063915]
    assert all(abs(float(c) - e) < 1e-5 for c, e in zip(coords, expected))


def test_barycentric_coords_minimal_cubic(minimal_cubic):
    coords = barycentric_coords(minimal_cubic, "-0.733172")
    expected = [0.381082, 0.771708, -0.211459, 0.058668]
    assert all(abs(float(c) - e) < 1e-5 for c, e in zip(coords, expected))


@pytest.mark.parametrize("k", [1, 3, 7, 12])
def test_identities_hold(num, k):
    for nodes in (regular_nodes(min(k, 10), num), chebyshev_nodes(k, num)):
        basis = build(nodes)
        unity_error, cardinal_error = identity_errors(basis)
        assert unity_error < 1e-20
        assert cardinal_error < 1e-20
        for m, x in enumerate(nodes.points):
            coords = barycentric_coords(basis, x)
            assert abs(sum(coords) - 1) < 1e-20
            assert abs(coords[m] - 1) < 1e-20


@pytest.mark.parametrize("k", [2, 5, 8])
def test_determinant_matches_product_formula(num, k):
    for points in random_node_sets(k, 5):
        nodes = validate([float(x) for x in points], num)
        basis = build(nodes)
        oracle = vandermonde_det(nodes)
        assert abs(basis.det - oracle) <= 1e-20 * abs(oracle)


@pytest.mark.parametrize("k", [2, 4, 6])
def test_interpolation_exactness(num, k):
    rng = np.random.default_rng([99, k])
    for points in random_node_sets(k, 3):
        basis = build(validate([float(x) for x in points], num))
        p = Polynomial.from_coeffs(rng.uniform(-1, 1, k + 1), num)
        values = [evaluate(p, x) for x in basis.nodes.points]
        for x in rng.uniform(-1, 1, 20):
            interpolated = sum(v * c for v, c in zip(values, barycentric_coords(basis, x)))
            assert abs(interpolated - evaluate(p, x)) < 1e-18


def test_singular_system_at_low_precision():
    low = get_context(64)
    with pytest.raises(SingularSystem):
        build(regular_nodes(10, low))
    build(regular_nodes(10, get_context(256)))
