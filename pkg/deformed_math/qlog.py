"""Deformed logarithms and exponentials.

Every function accepts a float or a numpy array for its first argument and
returns the matching shape. Indices may be given as plain floats or as
:class:`QIndex`.
"""

import enum
from dataclasses import dataclass
from typing import Union

import numpy as np

from config import EPS_Q
from errors import BadParameter, NonPositiveArgument, UndefinedQExp


class Regime(str, enum.Enum):
    SUB = "sub"
    LIMIT = "limit"
    SUPER = "super"


@dataclass(frozen=True)
class QIndex:
    """A deformation index q > 0."""

    value: float

    def __post_init__(self):
        if not np.isfinite(self.value) or self.value <= 0:
            raise BadParameter("q", self.value, "a finite real > 0")

    @property
    def regime(self) -> Regime:
        return classify(self.value)

    def __float__(self) -> float:
        return float(self.value)


IndexLike = Union[float, QIndex]


def index_value(q: IndexLike) -> float:
    value = float(q)
    if not np.isfinite(value) or value <= 0:
        raise BadParameter("q", value, "a finite real > 0")
    return value


def classify(q: IndexLike) -> Regime:
    value = float(q)
    if abs(value - 1.0) <= EPS_Q:
        return Regime.LIMIT
    return Regime.SUB if value < 1.0 else Regime.SUPER


def is_limit(q: IndexLike) -> bool:
    return classify(q) is Regime.LIMIT


def _positive(x) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    bad = ~(arr > 0)
    if np.any(bad):
        raise NonPositiveArgument(arr[bad].flat[0] if arr.ndim else float(arr))
    return arr


def q_log(x, q: IndexLike):
    """ln_q x = (x^{1-q} - 1) / (1 - q), and log x in the limit band.

    Evaluated as expm1((1 - q) log x) / (1 - q), which stays accurate as q
    approaches the limit band.
    """
    arr = _positive(x)
    q = index_value(q)
    if is_limit(q):
        return np.log(arr)
    one_minus_q = 1.0 - q
    return np.expm1(one_minus_q * np.log(arr)) / one_minus_q


def _log_of_q_exp(y, q: float):
    # log(exp_q y) = log1p((1 - q) y) / (1 - q)
    arr = np.asarray(y, dtype=float)
    if is_limit(q):
        return arr
    one_minus_q = 1.0 - q
    base = one_minus_q * arr
    if np.any(~(1.0 + base > 0)):
        offending = arr[~(1.0 + base > 0)].flat[0] if arr.ndim else float(arr)
        raise UndefinedQExp(float(offending), q)
    return np.log1p(base) / one_minus_q


def q_exp(x, q: IndexLike):
    """Inverse of :func:`q_log`; raises UndefinedQExp where 1 + (1 - q) x <= 0."""
    q = index_value(q)
    return np.exp(_log_of_q_exp(x, q))


def biparam_log(x, r: IndexLike, q: IndexLike):
    """ln_{r,q} x = ln_q(exp(ln_r x))."""
    inner = q_log(x, r)
    q = index_value(q)
    if is_limit(q):
        return inner
    one_minus_q = 1.0 - q
    return np.expm1(one_minus_q * inner) / one_minus_q


def biparam_exp(y, r: IndexLike, q: IndexLike):
    """exp_{r,q} y = exp_r(log(exp_q y)), the functional inverse of ln_{r,q}."""
    r = index_value(r)
    q = index_value(q)
    return q_exp(_log_of_q_exp(y, q), r)
