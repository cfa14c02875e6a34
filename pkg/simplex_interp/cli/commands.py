"""
Comandos de la CLI: analyze, minimize, tables, curve y schema.

Responsabilidad única: traducir argumentos a llamadas de services, imprimir
un RunRecord en stdout y mapear errores a códigos de salida.
"""

import functools
import json
import logging
import sys
import time
from typing import Any, Callable, Dict

import click
from pydantic import ValidationError

from simplex_interp.cli.formatters import (
    Formatter,
    analysis_payload,
    curve_payload,
    optimization_payload,
    render,
    table_payload,
)
from simplex_interp.cli.validators import CliValidators
from simplex_interp.core.config import get_settings
from simplex_interp.core.precision import get_context
from simplex_interp.logging_config import setup_logging
from simplex_interp.models.optimization import TableKind
from simplex_interp.schemas.optimizer_schema import Objective
from simplex_interp.schemas.run_record_schema import RunRecord
from simplex_interp.services.analysis import (
    CertificateMismatch,
    InvalidRadius,
    absorption_coefficient,
    analyze,
)
from simplex_interp.services.basis import SingularSystem, build
from simplex_interp.services.nodes import NodeSetError
from simplex_interp.services.optimize import minimize, reproduce_table

logger = logging.getLogger(__name__)
settings = get_settings()

# Códigos de salida
EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NOT_CONVERGED = 3
EXIT_NUMERICAL = 4


class CommandFailure(Exception):
    """Error que termina el comando con un código de salida concreto."""

    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


# ============================================================================
# OPCIONES COMUNES
# ============================================================================

def common_options(func: Callable) -> Callable:
    options = [
        click.option("--precision-bits", type=click.IntRange(min=16), default=settings.PRECISION_BITS,
                     envvar="SIMPLEX_INTERP_PRECISION_BITS", show_default=True,
                     help="Precisión binaria de trabajo."),
        click.option("--format", "output_format", type=click.Choice(["json", "csv"]), default="json",
                     show_default=True, help="Formato de salida."),
        click.option("--digits", type=click.IntRange(min=1), default=settings.DIGITS, show_default=True,
                     help="Cifras significativas impresas."),
        click.option("--quiet", is_flag=True, help="Solo advertencias y errores en stderr."),
        click.option("--timing", is_flag=True, help="Incluye wall_time_ms en la salida."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def node_source_options(func: Callable) -> Callable:
    options = [
        click.option("-k", "k", type=int, default=None, help="Grado de interpolación."),
        click.option("--nodes", type=str, default=None, help='Nodos separados por comas, p. ej. "-1,0,1".'),
        click.option("--regular", is_flag=True, help="Nodos regulares -1 + 2j/k."),
        click.option("--chebyshev", is_flag=True, help="Ceros del polinomio de Chebyshev T(k+1)."),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def run_command(name: str, body: Callable[[Dict[str, Any]], Dict[str, Any]]) -> Callable:
    """
    Envuelve el cuerpo de un comando: configura logging, mide el tiempo,
    imprime el RunRecord y convierte los errores en códigos de salida.
    """

    def decorator(func: Callable) -> Callable:
        @functools.wraps(func)
        def wrapper(precision_bits, output_format, digits, quiet, timing, **kwargs):
            setup_logging(level="WARNING" if quiet else settings.LOG_LEVEL)
            started = time.perf_counter()
            inputs = {key: value for key, value in kwargs.items()}
            inputs.update(precision_bits=precision_bits, digits=digits)
            exit_code = EXIT_OK
            try:
                num = get_context(precision_bits)
                outputs = body(dict(kwargs, num=num, digits=digits, quiet=quiet))
            except CommandFailure as e:
                click.echo(f"Error: {e}", err=True)
                sys.exit(e.exit_code)
            except ValidationError as e:
                error = e.errors()[0]
                click.echo(f"Error: [{error['type']}] {error['msg']}", err=True)
                sys.exit(EXIT_INPUT)
            except (NodeSetError, InvalidRadius) as e:
                click.echo(f"Error: [{getattr(e, 'rule', 'invalid_input')}] {e}", err=True)
                sys.exit(EXIT_INPUT)
            except (SingularSystem, CertificateMismatch) as e:
                logger.error(f"[CLI] Fallo numérico en {name}: {e}")
                click.echo(f"Error numérico: {e}", err=True)
                sys.exit(EXIT_NUMERICAL)

            details = outputs.pop("_details", None)
            if outputs.pop("_not_converged", False):
                exit_code = EXIT_NOT_CONVERGED
            record = RunRecord(
                command=name,
                inputs=inputs,
                outputs=outputs,
                details=details,
                precision_bits=precision_bits,
                wall_time_ms=round((time.perf_counter() - started) * 1000, 3) if timing else None,
            )
            click.echo(render(record, output_format))
            if exit_code != EXIT_OK:
                logger.warning(f"[CLI] {name} terminó con código {exit_code}")
                sys.exit(exit_code)

        return wrapper

    return decorator


def _node_set(args: Dict[str, Any]):
    is_valid, error_msg, nodes = CliValidators.validate_nodes(
        args.get("k"), args.get("nodes"), args.get("regular", False), args.get("chebyshev", False), args["num"]
    )
    if not is_valid:
        raise CommandFailure(error_msg, EXIT_INPUT)
    return nodes


# ============================================================================
# COMANDOS
# ============================================================================

def _analyze_body(args: Dict[str, Any]) -> Dict[str, Any]:
    nodes = _node_set(args)
    report = analyze(nodes)
    return analysis_payload(report, nodes, Formatter(args["num"], args["digits"]))


@click.command("analyze")
@node_source_options
@common_options
@run_command("analyze", _analyze_body)
def cmd_analyze(**kwargs):
    """Norma del proyector, ξ, 1-punto y desigualdades para un conjunto de nodos."""


def _minimize_body(args: Dict[str, Any]) -> Dict[str, Any]:
    num = args["num"]
    is_valid, error_msg, config = CliValidators.validate_optimizer(
        k=args["k"],
        objective=args["objective"],
        symmetric=not args["asymmetric"],
        fix_endpoints=not args["free_endpoints"],
        starts=args["starts"],
        max_iters=args["max_iters"],
        tol=args["tol"],
        rng_seed=args["seed"],
        workers=args["workers"],
        precision_bits=num.bits,
    )
    if not is_valid:
        raise CommandFailure(error_msg, EXIT_INPUT)
    result = minimize(config)
    payload = optimization_payload(result, Objective(config.objective).value, Formatter(num, args["digits"]))
    payload["_not_converged"] = not result.converged
    return payload


@click.command("minimize")
@click.option("-k", "k", type=int, required=True, help="Grado de interpolación.")
@click.option("--objective", type=click.Choice([o.value for o in Objective]), default=Objective.NORM.value,
              show_default=True, help="Cantidad a minimizar.")
@click.option("--starts", type=int, default=settings.STARTS, show_default=True)
@click.option("--seed", type=int, default=settings.SEED, show_default=True)
@click.option("--tol", type=float, default=settings.TOL, show_default=True)
@click.option("--max-iters", type=int, default=settings.MAX_ITERS, show_default=True)
@click.option("--asymmetric", is_flag=True, help="No impone simetría de los nodos.")
@click.option("--free-endpoints", is_flag=True, help="Los nodos extremos no se fijan en ±1.")
@click.option("--workers", type=int, default=settings.WORKERS, show_default=True)
@common_options
@run_command("minimize", _minimize_body)
def cmd_minimize(**kwargs):
    """Estima θ_k (norm) o ξ_k (xi) con búsqueda multi-arranque."""


def _tables_body(args: Dict[str, Any]) -> Dict[str, Any]:
    num = args["num"]
    if args["kmax"] is not None and args["kmax"] < 1:
        raise CommandFailure("[invalid_degree] --kmax debe ser al menos 1", EXIT_INPUT)
    table = reproduce_table(
        TableKind(int(args["table"])),
        kmax=args["kmax"],
        num=num,
        starts=args["starts"],
        seed=args["seed"],
        workers=args["workers"],
        progress=not args["quiet"],
    )
    payload = table_payload(table, Formatter(num, args["digits"]))
    payload["_not_converged"] = not all(row.converged for row in table.rows)
    return payload


@click.command("tables")
@click.option("--table", "table", type=click.Choice(["1", "2", "3", "4"]), required=True,
              help="1: normas mínimas, 2: ξ mínimos, 3: nodos regulares, 4: nodos de Chebyshev.")
@click.option("--kmax", type=int, default=None, help="Grado máximo (por defecto 10, o 12 con nodos de Chebyshev).")
@click.option("--starts", type=int, default=None, help="Arranques por grado (tablas 1-2).")
@click.option("--seed", type=int, default=None)
@click.option("--workers", type=int, default=None)
@common_options
@run_command("tables", _tables_body)
def cmd_tables(**kwargs):
    """Reproduce una tabla de normas y coeficientes de absorción."""


def _curve_body(args: Dict[str, Any]) -> Dict[str, Any]:
    nodes = _node_set(args)
    basis = build(nodes)
    xi = absorption_coefficient(basis)
    return curve_payload(basis, xi.value, args["samples"], Formatter(args["num"], args["digits"]))


@click.command("curve")
@node_source_options
@click.option("--samples", type=click.IntRange(min=2), default=101, show_default=True,
              help="Puntos de la malla uniforme en [-1, 1].")
@common_options
@run_command("curve", _curve_body)
def cmd_curve(**kwargs):
    """Datos de la curva de momentos, coordenadas baricéntricas y Σ|λ| en una malla."""


@click.command("schema")
def cmd_schema():
    """Imprime el JSON Schema de RunRecord."""
    click.echo(json.dumps(RunRecord.model_json_schema(), indent=2))
