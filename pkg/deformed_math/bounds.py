import math
from functools import lru_cache
from typing import Tuple

import numpy as np
from numpy.polynomial.legendre import leggauss

from config import DEFAULT_NODES
from deformed_math.qlog import IndexLike, index_value, is_limit
from errors import BadParameter, DegenerateArgument, LimitIndex, NonPositiveArgument


def _check_ratio_argument(x: float) -> float:
    x = float(x)
    if not x > 0:
        raise NonPositiveArgument(x)
    if x == 1.0:
        raise DegenerateArgument("ln_q x / log x is 0/0 at x = 1")
    return x


def hh_ratio_bounds(x: float, q: IndexLike) -> Tuple[float, float]:
    """Hermite-Hadamard sandwich of ln_q(x) / log(x).

    The ratio equals the mean of the convex function t -> x^{(1-q) t} over
    [0, 1], so it lies between the midpoint value and the endpoint average.

    Returns:
        (x^{(1-q)/2}, (x^{1-q} + 1) / 2)
    """
    x = _check_ratio_argument(x)
    q = index_value(q)
    if is_limit(q):
        raise LimitIndex("q", q)
    exponent = 1.0 - q
    return x ** (exponent / 2.0), (x**exponent + 1.0) / 2.0


@lru_cache(maxsize=32)
def _unit_interval_rule(nodes: int) -> Tuple[np.ndarray, np.ndarray]:
    t, w = leggauss(nodes)
    t = (t + 1.0) / 2.0
    w = w / 2.0
    t.setflags(write=False)
    w.setflags(write=False)
    return t, w


def qlog_quadrature_oracle(x: float, q: IndexLike, nodes: int = DEFAULT_NODES) -> float:
    """Gauss-Legendre evaluation of log(x) * ∫_0^1 x^{(1-q) t} dt, which equals ln_q x."""
    x = _check_ratio_argument(x)
    q = index_value(q)
    if isinstance(nodes, bool) or int(nodes) != nodes or nodes < 2:
        raise BadParameter("nodes", nodes, "an integer >= 2")
    t, w = _unit_interval_rule(int(nodes))
    log_x = math.log(x)
    integral = float(np.dot(w, np.exp((1.0 - q) * log_x * t)))
    return integral * log_x
