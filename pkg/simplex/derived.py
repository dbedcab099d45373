"""Distributions derived from others: FD/BE complements and mixtures."""

import numpy as np

from errors import BadParameter, DegenerateWeight
from simplex.distribution import DivergencePair, ProbabilityDistribution, validate


def fd_complement(p: ProbabilityDistribution) -> ProbabilityDistribution:
    """p'_j = (1 - p_j) / (n - 1)."""
    w = p.array
    at_one = np.flatnonzero(w >= 1.0)
    if at_one.size:
        raise DegenerateWeight(int(at_one[0]))
    return validate((1.0 - w) / (p.n - 1))


def be_complement(p: ProbabilityDistribution) -> ProbabilityDistribution:
    """p''_j = (1 + p_j) / (n + 1)."""
    return validate((1.0 + p.array) / (p.n + 1))


def mixture(pair: DivergencePair, v: float) -> ProbabilityDistribution:
    """(1 - v) p + v r for v in (0, 1]."""
    if not 0.0 < v <= 1.0:
        raise BadParameter("v", v, "a real in (0, 1]")
    if v == 1.0:
        return pair.r
    return validate((1.0 - v) * pair.p.array + v * pair.r.array)
