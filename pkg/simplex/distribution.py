"""Validated points of the open probability simplex."""

from dataclasses import dataclass
from typing import Iterable, List, Tuple, Union

import numpy as np
from pydantic import StrictFloat, StrictInt, TypeAdapter, ValidationError

from config import SUM_TOL_PER_WEIGHT
from errors import LengthMismatch, NonNumericWeight, NonPositiveWeight, NotNormalized, TooShort

# Strings and bools are not weights.
Weight = Union[StrictFloat, StrictInt]

_WEIGHTS = TypeAdapter(List[Weight])


@dataclass(frozen=True)
class ProbabilityDistribution:
    """Strictly positive weights summing to one; never renormalized."""

    weights: Tuple[float, ...]

    def __post_init__(self):
        n = len(self.weights)
        if n < 2:
            raise TooShort(n)
        for index, w in enumerate(self.weights):
            if not (np.isfinite(w) and w > 0):
                raise NonPositiveWeight(index, w)
        total = float(np.sum(self.weights))
        if abs(total - 1.0) > SUM_TOL_PER_WEIGHT * n:
            raise NotNormalized(total)

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.weights, dtype=float)

    def to_list(self) -> List[float]:
        return list(self.weights)


@dataclass(frozen=True)
class DivergencePair:
    p: ProbabilityDistribution
    r: ProbabilityDistribution

    def __post_init__(self):
        if self.p.n != self.r.n:
            raise LengthMismatch(self.p.n, self.r.n)

    @property
    def n(self) -> int:
        return self.p.n

    def swapped(self) -> "DivergencePair":
        return DivergencePair(self.r, self.p)


def validate(raw: Iterable[float]) -> ProbabilityDistribution:
    if isinstance(raw, np.ndarray):
        raw = raw.tolist()
    try:
        weights = _WEIGHTS.validate_python(list(raw))
    except ValidationError as e:
        error = e.errors()[0]
        raise NonNumericWeight(error["loc"][0] if error["loc"] else None, error["input"]) from e
    return ProbabilityDistribution(tuple(float(w) for w in weights))


def uniform(n: int) -> ProbabilityDistribution:
    if n < 2:
        raise TooShort(n)
    return ProbabilityDistribution((1.0 / n,) * n)
