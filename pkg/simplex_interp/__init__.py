"""
simplex_interp: normas de proyectores de interpolación polinómica en [-1, 1],
coeficientes de absorción de la curva de momentos por el símplex de nodos y
búsqueda de nodos óptimos.
"""

__version__ = "1.0.0"
