import pytest

from simplex_interp.services.nodes import (
    DuplicateNodes,
    InvalidDegree,
    NodeOutOfRange,
    TooFewNodes,
    chebyshev_nodes,
    regular_nodes,
    validate,
)
from simplex_interp.services.poly import chebyshev_t, evaluate


def test_regular_nodes_values(num):
    assert [float(x) for x in regular_nodes(1, num).points] == [-1.0, 1.0]
    cubic = regular_nodes(3, num)
    expected = [-1, num.mpf(-1) / 3, num.mpf(1) / 3, 1]
    assert all(abs(x - e) < 1e-70 for x, e in zip(cubic.points, expected))
    assert [float(x) for x in regular_nodes(4, num).points] == [-1.0, -0.5, 0.0, 0.5, 1.0]


@pytest.mark.parametrize("k", [1, 2, 5, 10])
def test_regular_nodes_constant_gap(num, k):
    points = regular_nodes(k, num).points
    gap = num.mpf(2) / k
    assert all(abs((b - a) - gap) < 1e-70 for a, b in zip(points, points[1:]))


def test_chebyshev_cubic(num):
    ctx = num.ctx
    outer = ctx.sqrt(2 + ctx.sqrt(2)) / 2
    inner = ctx.sqrt(2 - ctx.sqrt(2)) / 2
    points = chebyshev_nodes(3, num).points
    for x, e in zip(points, [-outer, -inner, inner, outer]):
        assert abs(x - e) < num.root_eps


def test_chebyshev_quartic_has_exact_center(num):
    ctx = num.ctx
    points = chebyshev_nodes(4, num).points
    assert points[2] == 0
    assert abs(points[4] - ctx.sqrt(5 + ctx.sqrt(5)) / (2 * ctx.sqrt(2))) < num.root_eps
    assert abs(points[3] - ctx.sqrt(5 - ctx.sqrt(5)) / (2 * ctx.sqrt(2))) < num.root_eps


def test_chebyshev_linear(num):
    points = chebyshev_nodes(1, num).points
    assert abs(points[1] - num.ctx.sqrt(2) / 2) < num.root_eps
    assert points[0] == -points[1]


@pytest.mark.parametrize("k", [1, 2, 3, 6, 11, 12])
def test_chebyshev_symmetry_and_residual(num, k):
    nodes = chebyshev_nodes(k, num)
    points = nodes.points
    d = nodes.d
    assert all(points[i] == -points[d - 1 - i] for i in range(d))
    t = chebyshev_t(k + 1, num)
    assert all(abs(evaluate(t, x)) < num.root_eps for x in points)


def test_invalid_degree(num):
    with pytest.raises(InvalidDegree):
        regular_nodes(0, num)
    with pytest.raises(InvalidDegree):
        chebyshev_nodes(-2, num)


def test_validate_sorts(num):
    nodes = validate([1, -1, 0], num)
    assert nodes.k == 2
    assert [float(x) for x in nodes.points] == [-1.0, 0.0, 1.0]


def test_validate_accepts_decimal_strings(num):
    nodes = validate([" -0.417791", "1", "-1", "0.417791"], num)
    assert nodes.k == 3
    assert nodes.points[1] == num.mpf("-0.417791")


@pytest.mark.parametrize(
    "points, error, rule",
    [
        ([0, 0, 1], DuplicateNodes, "duplicate_nodes"),
        ([-1.5, 0, 1], NodeOutOfRange, "node_out_of_range"),
        ([0.5], TooFewNodes, "too_few_nodes"),
        ([], TooFewNodes, "too_few_nodes"),
    ],
)
def test_validate_errors(num, points, error, rule):
    with pytest.raises(error) as excinfo:
        validate(points, num)
    assert excinfo.value.rule == rule


def test_moment_curve_vertices(num):
    nodes = validate([-1, 0, 1], num)
    assert nodes.moment_point(2) == (2, 4)
    assert [tuple(float(c) for c in v) for v in nodes.vertices()] == [(-1.0, 1.0), (0.0, 0.0), (1.0, 1.0)]
