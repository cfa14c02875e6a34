"""
Búsqueda multi-arranque de conjuntos de nodos que minimizan ‖P‖ o ξ.

Responsabilidad única: explorar el espacio parametrizado con Nelder-Mead
(scipy) desde varios arranques reproducibles y certificar el mejor resultado
con services.analysis.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import List

import numpy as np
from scipy.optimize import minimize as nelder_mead

from simplex_interp.core.precision import get_context
from simplex_interp.models.optimization import OptimizationResult, StartResult
from simplex_interp.schemas.optimizer_schema import Objective, OptimizerConfig
from simplex_interp.services.analysis import analyze
from simplex_interp.services.nodes import validate
from simplex_interp.services.optimize.fast_objective import OBJECTIVES
from simplex_interp.services.optimize.parametrization import NodeParametrization, initial_nodes

logger = logging.getLogger(__name__)


def parametrization_for(config: OptimizerConfig) -> NodeParametrization:
    return NodeParametrization(k=config.k, symmetric=config.symmetric, fix_endpoints=config.fix_endpoints)


def start_point(config: OptimizerConfig, index: int) -> np.ndarray:
    """
    Parámetros iniciales del arranque `index`. El arranque 0 es el conjunto
    de Chebyshev; el arranque i ≥ 1 lo perturba con default_rng([seed, i]),
    de modo que cada arranque no depende del número total de arranques.
    """
    param = parametrization_for(config)
    z0 = param.encode(initial_nodes(config.k, config.fix_endpoints))
    if index == 0:
        return z0
    rng = np.random.default_rng([config.rng_seed, index])
    return z0 + config.spread * rng.standard_normal(param.n_free)


def _simplex(z: np.ndarray, step: float) -> np.ndarray:
    return np.vstack([z] + [z + step * e for e in np.eye(len(z))])


def run_start(config: OptimizerConfig, index: int) -> StartResult:
    """
    Un arranque: Nelder-Mead y reinicios desde el mejor punto con la mitad
    del paso, hasta `restarts` reinicios o mejora menor que `tol`.
    """
    param = parametrization_for(config)
    objective = OBJECTIVES[Objective(config.objective).value]

    def f(z):
        return objective(param.nodes(z))

    z = start_point(config, index)
    step = config.step
    value = f(z)
    evaluations = 1
    success = False

    for attempt in range(config.restarts + 1):
        res = nelder_mead(
            f,
            z,
            method="Nelder-Mead",
            options={
                "initial_simplex": _simplex(z, step),
                "xatol": config.tol,
                "fatol": config.tol,
                "maxiter": config.max_iters,
                "adaptive": param.n_free > 2,
            },
        )
        evaluations += res.nfev
        improvement = value - res.fun
        if res.fun <= value:
            z, value = res.x, float(res.fun)
        success = bool(res.success)
        if attempt > 0 and improvement <= config.tol:
            break
        step /= 2

    return StartResult(
        index=index,
        nodes=tuple(float(x) for x in param.nodes(z)),
        value=value,
        evaluations=evaluations,
        success=success,
    )


def _run_all(config: OptimizerConfig) -> List[StartResult]:
    indices = list(range(config.starts))
    if config.workers > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            return list(pool.map(run_start, [config] * len(indices), indices))
    return [run_start(config, i) for i in indices]


def minimize(config: OptimizerConfig) -> OptimizationResult:
    """
    Estima θ_k (objective=norm) o ξ_k (objective=xi).

    Los resultados de cada arranque se reducen al de menor valor (ante
    empates, el vector de nodos lexicográficamente menor); ese conjunto se
    reevalúa con las rutinas certificadas a precision_bits.

    Args:
        config: Configuración de la búsqueda

    Returns:
        OptimizationResult: Mejor conjunto, valor certificado y diagnósticos
    """
    num = get_context(config.precision_bits)
    param = parametrization_for(config)
    objective = Objective(config.objective)

    if param.n_free == 0:
        results = [StartResult(
            index=0,
            nodes=tuple(float(x) for x in param.nodes(np.empty(0))),
            value=OBJECTIVES[objective.value](param.nodes(np.empty(0))),
            evaluations=1,
            success=True,
        )]
    else:
        logger.info(
            f"[OPTIMIZE] k={config.k}, objetivo={objective.value}, "
            f"{config.starts} arranques, {param.n_free} parámetros libres"
        )
        results = _run_all(config)

    history = []
    running = float("inf")
    for r in results:
        running = min(running, r.value)
        history.append((r.index, running))

    best = min(results, key=lambda r: (r.value, r.nodes))
    nodes = validate(best.nodes, num)
    report = analyze(nodes)
    if objective is Objective.NORM:
        best_value, companion = report.norm.value, report.xi.value
    else:
        best_value, companion = report.xi.value, report.norm.value

    converged = best.success
    if not converged:
        logger.warning(f"[OPTIMIZE] k={config.k}: el mejor arranque ({best.index}) no convergió")
    logger.info(
        f"[OPTIMIZE] k={config.k}, {objective.value} = {num.nstr(best_value, 10)} "
        f"(float64: {best.value:.10f}, arranque {best.index})"
    )
    return OptimizationResult(
        best_nodes=nodes,
        best_value=best_value,
        evaluations=sum(r.evaluations for r in results),
        converged=converged,
        history=tuple(history),
        companion=companion,
        report=report,
    )
