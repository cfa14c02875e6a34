"""
Reproducción de las tablas de normas y coeficientes de absorción.

Tablas 1 y 2: minimización por grado (cotas superiores de θ_k y ξ_k para k ≥ 3).
Tablas 3 y 4: evaluación certificada en nodos regulares y de Chebyshev.
"""

import logging
from typing import Optional

from tqdm import tqdm

from simplex_interp.core.precision import NumericContext, get_context
from simplex_interp.models.analysis import AnalysisReport
from simplex_interp.models.interpolation import NodeSet
from simplex_interp.models.optimization import SandwichCheck, TableArtifact, TableKind, TableRow
from simplex_interp.schemas.optimizer_schema import Objective, OptimizerConfig
from simplex_interp.services.analysis import analyze
from simplex_interp.services.nodes import chebyshev_nodes, regular_nodes
from simplex_interp.services.optimize.minimizer import minimize

logger = logging.getLogger(__name__)

DEFAULT_KMAX = {
    TableKind.THETA: 10,
    TableKind.XI_MIN: 10,
    TableKind.REGULAR: 10,
    TableKind.CHEBYSHEV: 12,
}

SANDWICH_TOL = 1e-8


def _row(k: int, nodes: NodeSet, report: AnalysisReport, use_xi: bool, converged: bool = True, minimizer: bool = False) -> TableRow:
    value, companion = (report.xi.value, report.norm.value) if use_xi else (report.norm.value, report.xi.value)
    return TableRow(
        k=k,
        value=value,
        companion=companion,
        abs_det=report.abs_det,
        nodes=nodes,
        lower=report.inequalities.lower,
        upper=report.inequalities.upper,
        right_equality=report.inequalities.right_equality,
        one_point=report.one_point.exists,
        minimal_certified=minimizer and use_xi and report.one_point.exists,
        converged=converged,
    )


def reproduce_table(
    kind: TableKind,
    kmax: Optional[int] = None,
    num: Optional[NumericContext] = None,
    starts: Optional[int] = None,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
    progress: bool = True,
) -> TableArtifact:
    """
    Genera una tabla fila por fila para k = 1..kmax.

    En las tablas 1-2 `minimal_certified` indica que el minimizador de ξ tiene
    1-punto, con lo que el proyector correspondiente es minimal.

    Args:
        kind: Tabla a reproducir
        kmax: Grado máximo (por defecto 10, o 12 para Chebyshev)
        num: Contexto numérico
        starts, seed, workers: Ajustes de la búsqueda (tablas 1-2)
        progress: Muestra una barra de progreso en stderr

    Returns:
        TableArtifact: Filas con valor, compañero, |det| y diagnósticos
    """
    kind = TableKind(kind)
    num = num or get_context()
    kmax = DEFAULT_KMAX[kind] if kmax is None else kmax
    if kmax < 1:
        raise ValueError(f"kmax debe ser al menos 1, se recibió {kmax}")

    rows = []
    for k in tqdm(range(1, kmax + 1), desc=f"Tabla {int(kind)}", disable=not progress):
        if kind in (TableKind.THETA, TableKind.XI_MIN):
            overrides = {"starts": starts, "rng_seed": seed, "workers": workers}
            config = OptimizerConfig(
                k=k,
                objective=Objective.NORM if kind is TableKind.THETA else Objective.XI,
                precision_bits=num.bits,
                **{key: value for key, value in overrides.items() if value is not None},
            )
            result = minimize(config)
            rows.append(_row(k, result.best_nodes, result.report, use_xi=kind is TableKind.XI_MIN,
                             converged=result.converged, minimizer=True))
        else:
            nodes = regular_nodes(k, num) if kind is TableKind.REGULAR else chebyshev_nodes(k, num)
            rows.append(_row(k, nodes, analyze(nodes), use_xi=True))
        logger.info(
            f"[TABLES] Tabla {int(kind)} k={k}: {num.nstr(rows[-1].value, 10)}, "
            f"{num.nstr(rows[-1].companion, 10)}"
        )
    return TableArtifact(kind=kind, kmax=kmax, rows=rows)


def optimum_sandwich(theta, xi, k: int, num: Optional[NumericContext] = None) -> SandwichCheck:
    """
    Verifica ½(1 + 1/(d-1))(θ_k - 1) + 1 ≤ ξ_k ≤ (d/2)(θ_k - 1) + 1 para
    un par de estimaciones (θ_k de TableKind.THETA y ξ_k de TableKind.XI_MIN).

    Returns:
        SandwichCheck: Cotas, si se cumplen a 1e-8 y el cociente (ξ_k-1)/(θ_k-1)
    """
    num = num or get_context()
    theta, xi = num.mpf(theta), num.mpf(xi)
    d = k + 1
    excess = theta - 1
    lower = (1 + num.ctx.one / (d - 1)) * excess / 2 + 1
    upper = num.mpf(d) / 2 * excess + 1
    ratio = (xi - 1) / excess if excess > num.tau else None
    holds = lower - SANDWICH_TOL <= xi <= upper + SANDWICH_TOL
    return SandwichCheck(lower=lower, xi=xi, upper=upper, holds=bool(holds), ratio=ratio)
