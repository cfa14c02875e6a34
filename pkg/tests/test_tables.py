import math

import pytest

from simplex_interp.core.precision import get_context
from simplex_interp.models.optimization import TableKind
from simplex_interp.services.basis import SingularSystem
from simplex_interp.services.optimize import optimum_sandwich, reproduce_table

# (k, ξ(S), ‖P‖) en nodos regulares
REGULAR = [
    (1, 1.0, 1.0),
    (2, 1.375, 1.25),
    (3, 2.262260, 1.631130),
    (4, 3.812500, 2.207824),
    (5, 6.167317, 3.106301),
    (6, 9.461457, 4.549341),
    (7, 13.824447, 6.929739),
    (8, 21.876588, 10.945645),
    (9, 41.283675, 17.848612),
    (10, 72.576233, 29.899955),
]

# (k, ξ(S), ‖P‖) en nodos de Chebyshev
CHEBYSHEV = [
    (1, 1.414213, 1.414213),
    (2, 2.0, 1.666666),
    (3, 2.496605, 1.847759),
    (4, 2.962610, 1.988854),
    (5, 3.414213, 2.104397),
    (6, 3.857835, 2.202214),
    (7, 4.296558, 2.287016),
    (8, 4.732050, 2.361856),
    (9, 5.165299, 2.428829),
    (10, 5.596925, 2.489430),
    (11, 6.027339, 2.544766),
    (12, 6.456823, 2.595678),
]

# (k, θ_k, ξ(S)) en el minimizador de la norma
THETA = [
    (1, 1.0, 1.0),
    (2, 1.25, 1.375),
    (3, 1.422919, 1.845839),
    (4, 1.559490, 2.224196),
    (5, 1.672210, 2.574785),
    (6, 1.768134, 2.911143),
    (7, 1.851599, 3.239031),
    (8, 1.925457, 3.561425),
    (9, 1.991685, 3.880036),
    (10, 2.051705, 4.195926),
]

# (k, ξ_k, ‖P‖) en el minimizador de ξ
XI_MIN = [
    (1, 1.0, 1.0),
    (2, 1.375, 1.25),
    (3, 1.635778, 1.604018),
    (4, 1.981193, 1.626067),
    (5, 2.210535, 1.782786),
    (6, 2.455130, 1.858521),
    (7, 2.678509, 1.962845),
    (8, 2.907301, 2.029565),
    (9, 3.128316, 2.108072),
    (10, 3.351866, 2.164915),
]

# Tablas impresas con 6 decimales truncados
PRINTED_DECIMALS = 6


def assert_rows(table, expected, value_tol, companion_tol):
    assert [row.k for row in table.rows] == [k for k, _, _ in expected]
    for row, (k, value, companion) in zip(table.rows, expected):
        assert abs(float(row.value) - value) < value_tol, f"k={k}"
        assert abs(float(row.companion) - companion) < companion_tol, f"k={k}"


def truncated(value, decimals=PRINTED_DECIMALS):
    scale = 10 ** decimals
    # 1e-6 de holgura en la escala para valores exactos como 2 o 1.375
    return math.floor(float(value) * scale + 1e-6) / scale


def assert_printed_rows(table, expected):
    assert [row.k for row in table.rows] == [k for k, _, _ in expected]
    for row, (k, value, companion) in zip(table.rows, expected):
        assert truncated(row.value) == pytest.approx(value, abs=1e-12), f"k={k}"
        assert truncated(row.companion) == pytest.approx(companion, abs=1e-12), f"k={k}"


def test_regular_table():
    table = reproduce_table(TableKind.REGULAR, num=get_context(256), progress=False)
    assert table.kmax == 10
    assert_printed_rows(table, REGULAR)
    # con 1-punto la cota superior se alcanza
    for row in table.rows:
        if row.one_point:
            assert row.right_equality
    assert [row.right_equality for row in table.rows[:3]] == [True, True, True]


def test_chebyshev_table():
    table = reproduce_table(TableKind.CHEBYSHEV, num=get_context(256), progress=False)
    assert table.kmax == 12
    assert_printed_rows(table, CHEBYSHEV)
    assert abs(float(table.rows[-1].abs_det) / 3.68529e-15 - 1) < 5e-3
    assert [row.right_equality for row in table.rows[:2]] == [True, True]
    assert not table.rows[2].one_point


def test_chebyshev_table_partial():
    table = reproduce_table(TableKind.CHEBYSHEV, kmax=2, num=get_context(256), progress=False)
    assert_printed_rows(table, CHEBYSHEV[:2])


def test_optimized_tables_small_degrees():
    num = get_context(256)
    theta = reproduce_table(TableKind.THETA, kmax=1, num=num, progress=False)
    assert_rows(theta, THETA[:1], 1e-12, 1e-12)
    xi = reproduce_table(TableKind.XI_MIN, kmax=2, num=num, starts=2, progress=False)
    assert_rows(xi, XI_MIN[:2], 1e-12, 1e-12)
    # nodos {-1, 0, 1}: el minimizador de ξ tiene 1-punto y el proyector es minimal
    assert xi.rows[1].minimal_certified


def test_precision_stress():
    with pytest.raises(SingularSystem):
        reproduce_table(TableKind.REGULAR, kmax=10, num=get_context(64), progress=False)


def test_regular_table_low_precision_small_degrees():
    table = reproduce_table(TableKind.REGULAR, kmax=5, num=get_context(64), progress=False)
    assert_rows(table, REGULAR[:5], 1e-5, 1e-5)


def test_invalid_kmax():
    with pytest.raises(ValueError):
        reproduce_table(TableKind.REGULAR, kmax=-1, progress=False)


def test_optimum_sandwich():
    cubic = optimum_sandwich(1.422919, 1.635778, 3)
    assert cubic.holds
    assert abs(float(cubic.lower) - 1.281946) < 1e-5
    assert abs(float(cubic.upper) - 1.845838) < 1e-5
    assert abs(float(cubic.ratio) - 1.503307) < 1e-5

    quartic = optimum_sandwich(1.559490, 1.981193, 4)
    assert quartic.holds
    assert abs(float(quartic.lower) - 1.349681) < 1e-5
    assert abs(float(quartic.upper) - 2.398725) < 1e-5

    assert optimum_sandwich(1, 1, 1).ratio is None


@pytest.fixture(scope="module")
def theta_table():
    return reproduce_table(TableKind.THETA, num=get_context(256), progress=False)


@pytest.fixture(scope="module")
def xi_table():
    return reproduce_table(TableKind.XI_MIN, num=get_context(256), progress=False)


@pytest.mark.slow
def test_theta_table_full(theta_table):
    table = theta_table
    assert_rows(table, THETA, 1e-6, 1e-5)
    assert abs(table.rows[2].nodes.as_floats()[2] - 0.417791) < 1e-4


@pytest.mark.slow
def test_xi_table_full(xi_table):
    table = xi_table
    assert_rows(table, XI_MIN, 1e-6, 1e-5)
    assert abs(table.rows[2].nodes.as_floats()[2] - 0.481618) < 1e-4


@pytest.mark.slow
def test_optimum_sandwich_on_computed_tables(theta_table, xi_table):
    for theta_row, xi_row in zip(theta_table.rows, xi_table.rows):
        assert theta_row.k == xi_row.k
        check = optimum_sandwich(theta_row.value, xi_row.value, theta_row.k)
        assert check.holds, f"k={theta_row.k}"


def test_optimum_sandwich_on_small_degree_estimates():
    num = get_context(256)
    theta = reproduce_table(TableKind.THETA, kmax=2, num=num, starts=2, progress=False)
    xi = reproduce_table(TableKind.XI_MIN, kmax=2, num=num, starts=2, progress=False)
    for theta_row, xi_row in zip(theta.rows, xi.rows):
        assert optimum_sandwich(theta_row.value, xi_row.value, theta_row.k, num).holds
