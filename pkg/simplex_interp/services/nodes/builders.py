"""
Familias de nodos: regulares (equiespaciados) y de Chebyshev.
"""

import logging
from typing import Optional

from simplex_interp.core.precision import NumericContext, get_context
from simplex_interp.models.interpolation import NodeSet
from simplex_interp.services.nodes.validators import check_degree, validate
from simplex_interp.services.poly import chebyshev_t, evaluate

logger = logging.getLogger(__name__)


def regular_nodes(k: int, num: Optional[NumericContext] = None) -> NodeSet:
    """
    Nodos regulares x_j = -1 + 2j/k, j = 0..k.

    Raises:
        InvalidDegree: Si k < 1
    """
    check_degree(k)
    num = num or get_context()
    points = [num.mpf(2 * j - k) / k for j in range(k + 1)]
    return validate(points, num)


def chebyshev_nodes(k: int, num: Optional[NumericContext] = None) -> NodeSet:
    """
    Ceros del polinomio de Chebyshev T(k+1), en orden creciente.

    Se calculan por la fórmula del coseno en la mitad no negativa, se pulen
    con un paso de Newton sobre T(k+1) (recurrencia) y se reflejan, de modo
    que points[i] = -points[d-1-i] exactamente y el nodo central es 0.

    Raises:
        InvalidDegree: Si k < 1
    """
    check_degree(k)
    num = num or get_context()
    ctx = num.ctx
    d = k + 1
    t = chebyshev_t(d, num)
    dt = t.derivative()

    positive = []
    for j in range(1, d // 2 + 1):
        x = ctx.cos((2 * j - 1) * ctx.pi / (2 * d))
        x = x - evaluate(t, x) / evaluate(dt, x)
        positive.append(x)

    points = [-x for x in positive]
    if d % 2 == 1:
        points.append(ctx.zero)
    points.extend(positive)

    residual = max(abs(evaluate(t, x)) for x in points)
    logger.debug(f"[NODES] Chebyshev k={k}: residuo máximo {num.nstr(residual, 5)}")
    return validate(points, num)
