"""Closed catalog of ψ kernels for quasilinear means.

Each kernel pairs an analytic evaluation with its analytic inverse, so a
quasilinear mean never needs root finding.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Literal, Optional, Sequence, Type

import numpy as np
from pydantic import BaseModel

from deformed_math.qlog import biparam_exp, biparam_log, index_value, is_limit, q_exp, q_log
from errors import BadParameter, DomainError, LengthMismatch

logger = logging.getLogger(__name__)


class PsiKernel:
    family: str = ""

    def evaluate(self, x):
        raise NotImplementedError()

    def inverse(self, y):
        raise NotImplementedError()

    @property
    def increasing(self) -> bool:
        raise NotImplementedError()

    @property
    def concave_increasing_or_convex_decreasing(self) -> bool:
        raise NotImplementedError()

    def params(self) -> Dict[str, float]:
        return {}

    def describe(self) -> Dict[str, object]:
        return {"family": self.family, **self.params()}


@dataclass(frozen=True)
class LogKernel(PsiKernel):
    family = "log"

    def evaluate(self, x):
        return np.log(np.asarray(x, dtype=float))

    def inverse(self, y):
        return np.exp(np.asarray(y, dtype=float))

    @property
    def increasing(self) -> bool:
        return True

    @property
    def concave_increasing_or_convex_decreasing(self) -> bool:
        return True


@dataclass(frozen=True)
class PowerKernel(PsiKernel):
    """ψ(x) = x^e with e != 0; the Rényi kernel x^{1-q} is ``PowerKernel(1 - q)``."""

    exponent: float
    family = "power"

    def __post_init__(self):
        if not np.isfinite(self.exponent) or self.exponent == 0:
            raise BadParameter("exponent", self.exponent, "a finite non-zero real")

    @classmethod
    def for_index(cls, q: float) -> "PowerKernel":
        return cls(1.0 - index_value(q))

    def evaluate(self, x):
        return np.power(np.asarray(x, dtype=float), self.exponent)

    def inverse(self, y):
        arr = np.asarray(y, dtype=float)
        if np.any(~(arr > 0)):
            raise DomainError(f"x^{self.exponent} has range (0, inf); cannot invert {y!r}")
        return np.power(arr, 1.0 / self.exponent)

    @property
    def increasing(self) -> bool:
        return self.exponent > 0

    @property
    def concave_increasing_or_convex_decreasing(self) -> bool:
        return self.exponent <= 1.0

    def params(self) -> Dict[str, float]:
        return {"exponent": self.exponent}


@dataclass(frozen=True)
class QLogKernel(PsiKernel):
    q: float
    family = "qlog"

    def __post_init__(self):
        index_value(self.q)

    def evaluate(self, x):
        return q_log(x, self.q)

    def inverse(self, y):
        return q_exp(y, self.q)

    @property
    def increasing(self) -> bool:
        return True

    @property
    def concave_increasing_or_convex_decreasing(self) -> bool:
        return True

    def params(self) -> Dict[str, float]:
        return {"q": self.q}


@dataclass(frozen=True)
class BiLogKernel(PsiKernel):
    r: float
    q: float
    family = "bilog"

    def __post_init__(self):
        index_value(self.r)
        index_value(self.q)

    def evaluate(self, x):
        return biparam_log(x, self.r, self.q)

    def inverse(self, y):
        return biparam_exp(y, self.r, self.q)

    @property
    def increasing(self) -> bool:
        return True

    @property
    def concave_increasing_or_convex_decreasing(self) -> bool:
        # second derivative carries the sign of (1 - q) - r x^{r-1}
        return self.q >= 1.0 or is_limit(self.q)

    def params(self) -> Dict[str, float]:
        return {"r": self.r, "q": self.q}


KERNEL_REGISTRY: Dict[str, Type[PsiKernel]] = {
    "log": LogKernel,
    "power": PowerKernel,
    "qlog": QLogKernel,
    "bilog": BiLogKernel,
}


class KernelSpec(BaseModel):
    """Serializable description of a catalog kernel."""

    family: Literal["log", "power", "qlog", "bilog"]
    exponent: Optional[float] = None
    q: Optional[float] = None
    r: Optional[float] = None

    def build(self) -> PsiKernel:
        try:
            if self.family == "log":
                return LogKernel()
            if self.family == "power":
                return PowerKernel(self.exponent)
            if self.family == "qlog":
                return QLogKernel(self.q)
            return BiLogKernel(self.r, self.q)
        except TypeError as e:
            raise BadParameter("kernel", self.model_dump(exclude_none=True), f"complete {self.family} parameters") from e

    @classmethod
    def of(cls, kernel: PsiKernel) -> "KernelSpec":
        return cls(family=kernel.family, **kernel.params())


def psi_eval(kernel: PsiKernel, x):
    return kernel.evaluate(x)


def psi_inverse(kernel: PsiKernel, y):
    return kernel.inverse(y)


def quasilinear_mean(kernel: PsiKernel, values: Sequence[float], weights) -> float:
    """M_ψ(x_1, ..., x_n) = ψ^{-1}(Σ p_j ψ(x_j)).

    Args:
        kernel: catalog ψ.
        values: points x_j in ψ's domain.
        weights: a ProbabilityDistribution of the same length.

    Returns:
        float: the weighted quasilinear mean.
    """
    xs = np.asarray(values, dtype=float)
    ws = weights.array
    if xs.shape != ws.shape:
        raise LengthMismatch(xs.size, ws.size)
    return float(kernel.inverse(np.dot(ws, kernel.evaluate(xs))))
