"""
Módulo de la base de Lagrange: matriz de interpolación, determinante y coordenadas baricéntricas.
"""

from .lagrange import SingularSystem, build, vandermonde_det, barycentric_coords, identity_errors

__all__ = [
    "SingularSystem",
    "build",
    "vandermonde_det",
    "barycentric_coords",
    "identity_errors",
]
