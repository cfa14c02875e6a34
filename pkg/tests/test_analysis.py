import pytest

from simplex_interp.services.analysis import (
    InvalidRadius,
    absorbs,
    absorption_coefficient,
    analyze,
    dilated_coords,
    dilated_vertices,
    find_one_point,
    inequality_report,
    norm_via_barycentric,
    projector_norm,
    quadratic_closed_form,
    quadratic_extremal_points,
)
from simplex_interp.services.basis import build
from simplex_interp.services.nodes import chebyshev_nodes, regular_nodes, validate


def rel(a, b):
    return abs(float(a) - float(b)) / abs(float(b))


# ============================================================================
# VALORES EXACTOS EN NODOS FIJOS
# ============================================================================

def test_quadratic_classic_nodes(quadratic_basis):
    assert rel(projector_norm(quadratic_basis).value, 1.25) < 1e-9
    assert rel(absorption_coefficient(quadratic_basis).value, 1.375) < 1e-9


def test_cubic_chebyshev(chebyshev_cubic, num):
    expected_norm = num.ctx.sqrt(2 + num.ctx.sqrt(2))
    assert abs(projector_norm(chebyshev_cubic).value - expected_norm) < 1e-30
    assert abs(float(absorption_coefficient(chebyshev_cubic).value) - 2.496605) < 1e-6


def test_cubic_regular(regular_cubic):
    assert abs(float(projector_norm(regular_cubic).value) - 1.6311303) < 1e-6
    assert abs(float(absorption_coefficient(regular_cubic).value) - 2.262260) < 1e-6


def test_quartic_chebyshev_norm(num):
    basis = build(chebyshev_nodes(4, num))
    expected = (1 + 4 * num.ctx.sqrt(5)) / 5
    assert abs(projector_norm(basis).value - expected) < 1e-30


def test_quartic_regular_norm(num):
    basis = build(regular_nodes(4, num))
    assert abs(float(projector_norm(basis).value) - 2.207824) < 1e-6


def test_linear_is_contained(num):
    basis = build(regular_nodes(1, num))
    xi = absorption_coefficient(basis)
    assert xi.contained
    assert xi.value == 1
    assert projector_norm(basis).value == 1
    assert inequality_report(basis).ratio is None


def test_witnesses_carry_coordinates(quadratic_basis):
    norm = projector_norm(quadratic_basis)
    assert [float(w.x) for w in norm.witnesses] == [-0.5, 0.5]
    for w in norm.witnesses:
        assert abs(sum(abs(c) for c in w.coords) - norm.value) < 1e-18


def test_worst_index_is_reported(quadratic_basis):
    xi = absorption_coefficient(quadratic_basis)
    assert not xi.contained
    # -λ_1 y -λ_3 alcanzan el mismo máximo 1/8; se reporta el menor índice
    assert xi.worst_index == 1
    assert abs(float(xi.worst_point) - 0.5) < 1e-30


# ============================================================================
# 1-PUNTOS Y DESIGUALDADES
# ============================================================================

def test_one_point_regular_cubic(regular_cubic):
    certificate = find_one_point(regular_cubic)
    assert certificate.exists
    assert abs(float(certificate.x_star) + 0.699055) < 1e-5
    assert certificate.negative_index == 3
    expected = [0.360848, 0.890801, -0.315565, 0.063915]
    assert all(abs(float(c) - e) < 1e-5 for c, e in zip(certificate.coords, expected))


def test_one_point_minimal_cubic(minimal_cubic):
    certificate = find_one_point(minimal_cubic)
    assert certificate.exists
    assert abs(float(certificate.x_star) + 0.733172) < 1e-5
    assert certificate.negative_index == 3


def test_no_one_point_for_chebyshev_cubic(chebyshev_cubic):
    certificate = find_one_point(chebyshev_cubic)
    assert not certificate.exists
    assert certificate.x_star is None


def test_inequalities_chebyshev_cubic(chebyshev_cubic):
    report = inequality_report(chebyshev_cubic)
    assert abs(float(report.lower) - 1.5651727) < 1e-6
    assert abs(float(report.xi) - 2.496605) < 1e-6
    assert abs(float(report.upper) - 2.695518) < 1e-6
    assert not report.right_equality


def test_inequalities_minimal_cubic(minimal_cubic):
    report = inequality_report(minimal_cubic)
    assert abs(float(report.upper) - 1.845839) < 1e-5
    assert report.right_equality
    assert report.residual < 1e-10


def test_inequalities_quadratic_attain_upper_bound(quadratic_basis):
    report = inequality_report(quadratic_basis)
    assert report.right_equality
    assert abs(float(report.ratio) - 1.5) < 1e-12


def test_analyze_bundles_everything(num):
    report = analyze(regular_nodes(3, num))
    assert report.k == 3
    assert report.one_point.exists
    assert report.inequalities.right_equality
    assert abs(report.abs_det - num.mpf(256) / 243) < 1e-60


# ============================================================================
# CASO CUADRÁTICO
# ============================================================================

def test_closed_form_values(num):
    xi, norm = quadratic_closed_form(1, num)
    assert (xi, norm) == (num.mpf(11) / 8, num.mpf(5) / 4)
    r = 2 * num.ctx.sqrt(2) / 3
    xi, norm = quadratic_closed_form(r, num)
    assert abs(xi - num.mpf(11) / 8) < 1e-60
    assert abs(norm - num.mpf(5) / 4) < 1e-60
    xi, norm = quadratic_closed_form("0.8", num)
    assert abs(xi - num.mpf("2.6875")) < 1e-60
    assert abs(norm - num.mpf("2.125")) < 1e-60


@pytest.mark.parametrize("r", [0, -0.1, 1.5])
def test_closed_form_invalid_radius(num, r):
    with pytest.raises(InvalidRadius):
        quadratic_closed_form(r, num)


@pytest.mark.parametrize("i", range(1, 21))
def test_closed_form_matches_analysis(num, i):
    r = num.mpf(i) / 20
    basis = build(validate([-r, 0, r], num))
    norm = projector_norm(basis)
    xi = absorption_coefficient(basis)
    expected_xi, expected_norm = quadratic_closed_form(r, num)
    assert abs(norm.value - expected_norm) < 1e-12
    assert abs(xi.value - expected_xi) < 1e-12
    assert abs(xi.value - (3 * norm.value - 1) / 2) < 1e-12

    extremal = quadratic_extremal_points(r, num)
    for w in norm.witnesses:
        assert min(abs(w.x - e) for e in extremal) < 1e-30


# ============================================================================
# ORÁCULO POR MALLA
# ============================================================================

def test_grid_oracle_linear(num):
    assert abs(norm_via_barycentric(build(regular_nodes(1, num)), 50) - 1) < 1e-60


def test_grid_oracle_quadratic(quadratic_basis):
    value = norm_via_barycentric(quadratic_basis, 10 ** 5)
    assert abs(float(value) - 1.25) < 1e-8
    assert value <= projector_norm(quadratic_basis).value + 1e-15


def test_grid_oracle_chebyshev_cubic(chebyshev_cubic):
    value = norm_via_barycentric(chebyshev_cubic, 10 ** 6)
    exact = projector_norm(chebyshev_cubic).value
    assert abs(float(value) - 1.8477590650) < 1e-10
    assert value <= exact + 1e-15


@pytest.mark.parametrize("k", [2, 4, 6])
def test_grid_oracle_is_lower_bound(num, k):
    basis = build(regular_nodes(k, num))
    exact = projector_norm(basis).value
    value = norm_via_barycentric(basis, 10 ** 5)
    assert exact - 1e-6 <= value <= exact + 1e-15


def test_grid_oracle_rejects_small_grid(quadratic_basis):
    with pytest.raises(ValueError):
        norm_via_barycentric(quadratic_basis, 1)


# ============================================================================
# SÍMPLICES DILATADOS
# ============================================================================

def test_dilated_simplex_at_xi_absorbs(chebyshev_cubic):
    xi = absorption_coefficient(chebyshev_cubic)
    assert absorbs(chebyshev_cubic, xi.value, xi)
    assert not absorbs(chebyshev_cubic, xi.value - 1e-6, xi)

    coords = dilated_coords(chebyshev_cubic, xi.worst_point, xi.value)
    assert abs(min(coords)) < 1e-30
    assert abs(sum(coords) - 1) < 1e-30


def test_dilated_vertices_identity(quadratic_basis):
    vertices = quadratic_basis.nodes.vertices()
    same = dilated_vertices(quadratic_basis, 1)
    assert all(abs(a - b) < 1e-60 for v, w in zip(same, vertices) for a, b in zip(v, w))
    scaled = dilated_vertices(quadratic_basis, 2)
    # baricentro (0, 2/3); el vértice (0, 0) pasa a (0, -2/3)
    assert abs(scaled[1][1] + quadratic_basis.num.mpf(2) / 3) < 1e-60
