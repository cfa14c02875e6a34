"""
Módulo de análisis: norma del proyector, coeficiente de absorción, 1-puntos,
desigualdades entre ambos y fórmulas cerradas del caso cuadrático.
"""

from .norm import projector_norm, lebesgue_function, breakpoints
from .absorption import absorption_coefficient, dilated_coords, dilated_vertices, absorbs
from .certificates import CertificateMismatch, find_one_point, inequality_report
from .closed_forms import InvalidRadius, quadratic_closed_form, quadratic_extremal_points
from .oracle import norm_via_barycentric
from .report import analyze, analyze_basis

__all__ = [
    "projector_norm",
    "lebesgue_function",
    "breakpoints",
    "absorption_coefficient",
    "dilated_coords",
    "dilated_vertices",
    "absorbs",
    "CertificateMismatch",
    "find_one_point",
    "inequality_report",
    "InvalidRadius",
    "quadratic_closed_form",
    "quadratic_extremal_points",
    "norm_via_barycentric",
    "analyze",
    "analyze_basis",
]
