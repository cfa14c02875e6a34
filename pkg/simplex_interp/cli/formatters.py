"""
Conversión de resultados a la carga plana de RunRecord y renderizado JSON / CSV.

Los números se imprimen como cadenas decimales con `digits` cifras
significativas; JSON y CSV comparten exactamente la misma carga (`outputs`).
Lo que no cabe en filas CSV (vértices del símplex, certificados por fila de
las tablas) va en `details`, que solo aparece en JSON.
"""

import csv
import io
from typing import Any, Dict, List, Optional

from simplex_interp.core.precision import NumericContext
from simplex_interp.models.analysis import AnalysisReport
from simplex_interp.models.interpolation import LagrangeBasis, NodeSet
from simplex_interp.models.optimization import OptimizationResult, TableArtifact
from simplex_interp.schemas.run_record_schema import RunRecord
from simplex_interp.services.analysis import dilated_coords, dilated_vertices
from simplex_interp.services.basis import barycentric_coords

TABLE_COLUMNS = ["k", "value", "companion", "abs_det"]


class Formatter:
    """Formatea Scalars de un contexto con un número fijo de cifras."""

    def __init__(self, num: NumericContext, digits: int):
        self.num = num
        self.digits = digits

    def __call__(self, value) -> Optional[str]:
        if value is None:
            return None
        return self.num.nstr(value, self.digits)

    def many(self, values) -> List[str]:
        return [self(v) for v in values]


# ============================================================================
# CARGAS
# ============================================================================

def analysis_payload(report: AnalysisReport, nodes: NodeSet, fmt: Formatter) -> Dict[str, Any]:
    one_point = report.one_point
    inequalities = report.inequalities
    return {
        "k": report.k,
        "nodes": fmt.many(nodes.points),
        "norm": fmt(report.norm.value),
        "witnesses": fmt.many(w.x for w in report.norm.witnesses),
        "xi": fmt(report.xi.value),
        "contained": report.xi.contained,
        "worst_index": report.xi.worst_index,
        "worst_point": fmt(report.xi.worst_point),
        "one_point_exists": one_point.exists,
        "one_point_x": fmt(one_point.x_star),
        "one_point_negative_index": one_point.negative_index,
        "one_point_coords": fmt.many(one_point.coords) if one_point.coords else [],
        "lower": fmt(inequalities.lower),
        "upper": fmt(inequalities.upper),
        "ratio": fmt(inequalities.ratio),
        "residual": fmt(inequalities.residual),
        "right_equality": inequalities.right_equality,
        "abs_det": fmt(report.abs_det),
    }


def optimization_payload(result: OptimizationResult, objective: str, fmt: Formatter) -> Dict[str, Any]:
    return {
        "k": result.best_nodes.k,
        "objective": objective,
        "best_value": fmt(result.best_value),
        "companion": fmt(result.companion),
        "best_nodes": fmt.many(result.best_nodes.points),
        "evaluations": result.evaluations,
        "converged": result.converged,
        "one_point_exists": result.report.one_point.exists if result.report else None,
        "history": [f"{index}:{value:.12g}" for index, value in result.history],
    }


def table_payload(table: TableArtifact, fmt: Formatter) -> Dict[str, Any]:
    rows = [
        {"k": row.k, "value": fmt(row.value), "companion": fmt(row.companion), "abs_det": fmt(row.abs_det)}
        for row in table.rows
    ]
    diagnostics = [
        {
            "k": row.k,
            "nodes": fmt.many(row.nodes.points),
            "lower": fmt(row.lower),
            "upper": fmt(row.upper),
            "right_equality": row.right_equality,
            "one_point": row.one_point,
            "minimal_certified": row.minimal_certified,
            "converged": row.converged,
        }
        for row in table.rows
    ]
    return {
        "rows": rows,
        "_details": {"table": int(table.kind), "kmax": table.kmax, "diagnostics": diagnostics},
    }


def curve_payload(basis: LagrangeBasis, xi, samples: int, fmt: Formatter) -> Dict[str, Any]:
    """
    Datos para graficar la curva de momentos, el símplex S y su dilatado ξS.
    """
    num = basis.num
    k, d = basis.nodes.k, basis.d
    rows = []
    for i in range(samples):
        x = num.mpf(2 * i) / (samples - 1) - 1
        row = {"x": fmt(x)}
        for m, t in enumerate(basis.nodes.moment_point(x), start=1):
            row[f"t{m}"] = fmt(t)
        coords = barycentric_coords(basis, x)
        for j, c in enumerate(coords, start=1):
            row[f"lambda{j}"] = fmt(c)
        row["sum_abs"] = fmt(sum(abs(c) for c in coords))
        row["min_dilated"] = fmt(min(dilated_coords(basis, x, xi)))
        rows.append(row)
    return {
        "rows": rows,
        "_details": {
            "k": k,
            "d": d,
            "xi": fmt(xi),
            "vertices": [fmt.many(v) for v in basis.nodes.vertices()],
            "dilated_vertices": [fmt.many(v) for v in dilated_vertices(basis, xi)],
        },
    }


# ============================================================================
# RENDERIZADO
# ============================================================================

def render_json(record: RunRecord) -> str:
    return record.model_dump_json(indent=2)


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ";".join(_cell(v) for v in value)
    return str(value)


def render_csv(record: RunRecord) -> str:
    """
    CSV con fila de encabezado. Si la salida tiene filas ("rows") se emite
    una línea por fila; si no, una sola línea con la carga plana.
    """
    outputs = record.outputs
    rows = outputs["rows"] if "rows" in outputs else [outputs]
    if record.command == "tables":
        header = TABLE_COLUMNS
    else:
        header = list(rows[0].keys()) if rows else []

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(row.get(column)) for column in header])
    return buffer.getvalue().rstrip("\n")


def render(record: RunRecord, output_format: str) -> str:
    return render_csv(record) if output_format == "csv" else render_json(record)
