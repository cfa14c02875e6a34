import logging

from simplex_interp.models.analysis import AnalysisReport
from simplex_interp.models.interpolation import LagrangeBasis, NodeSet
from simplex_interp.services.analysis.absorption import absorption_coefficient
from simplex_interp.services.analysis.certificates import find_one_point, inequality_report
from simplex_interp.services.analysis.norm import projector_norm
from simplex_interp.services.basis import build

logger = logging.getLogger(__name__)


def analyze_basis(basis: LagrangeBasis) -> AnalysisReport:
    """Calcula ‖P‖, ξ, el certificado de 1-punto y las desigualdades de una base ya construida."""
    norm = projector_norm(basis)
    xi = absorption_coefficient(basis)
    one_point = find_one_point(basis, norm)
    inequalities = inequality_report(basis, norm, xi, one_point)
    return AnalysisReport(
        k=basis.nodes.k,
        norm=norm,
        xi=xi,
        one_point=one_point,
        inequalities=inequalities,
        abs_det=abs(basis.det),
    )


def analyze(nodes: NodeSet) -> AnalysisReport:
    """
    Análisis completo de un conjunto de nodos.

    Raises:
        SingularSystem: Si A es numéricamente singular
        CertificateMismatch: Si las cantidades calculadas no son consistentes
    """
    report = analyze_basis(build(nodes))
    num = nodes.num
    logger.info(
        f"[ANALYSIS] k={report.k}: ‖P‖ = {num.nstr(report.norm.value, 10)}, "
        f"ξ = {num.nstr(report.xi.value, 10)}, 1-punto: {report.one_point.exists}"
    )
    return report
