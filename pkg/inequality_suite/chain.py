"""Ordered multi-term inequality chains and identities."""

import enum
from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

import numpy as np

from config import IDENTITY_TOL
from errors import BadParameter, NumericalRangeError


class Relation(str, enum.Enum):
    NON_INCREASING = "non-increasing"
    NON_DECREASING = "non-decreasing"
    EQUAL = "equal"


@dataclass(frozen=True)
class BoundChain:
    labels: Tuple[str, ...]
    values: Tuple[float, ...]
    relation: Relation

    def __post_init__(self):
        if len(self.labels) != len(self.values):
            raise BadParameter("labels", len(self.labels), f"{len(self.values)} labels, one per value")
        if len(self.values) < 2:
            raise BadParameter("values", len(self.values), "at least two terms")
        for label, value in zip(self.labels, self.values):
            if not np.isfinite(value):
                raise NumericalRangeError(f"chain term {label} = {value!r} is not finite")

    @classmethod
    def of(cls, relation: Relation, terms: Sequence[Tuple[str, float]]) -> "BoundChain":
        return cls(
            tuple(label for label, _ in terms),
            tuple(float(value) for _, value in terms),
            Relation(relation),
        )

    def gaps(self) -> np.ndarray:
        diffs = np.diff(np.asarray(self.values, dtype=float))
        if self.relation is Relation.NON_DECREASING:
            return diffs
        if self.relation is Relation.NON_INCREASING:
            return -diffs
        return -np.abs(diffs)

    @property
    def slack(self) -> float:
        return float(np.min(self.gaps()))

    @property
    def scale(self) -> float:
        return max(1.0, float(np.max(np.abs(self.values))))

    def effective_tol(self, tol: float) -> float:
        if self.relation is Relation.EQUAL:
            return min(tol, IDENTITY_TOL)
        return tol

    def verify(self, tol: float) -> bool:
        return self.slack >= -self.effective_tol(tol) * self.scale

    def to_dict(self) -> Dict[str, object]:
        return {
            "relation": self.relation.value,
            "labels": list(self.labels),
            "values": list(self.values),
        }
