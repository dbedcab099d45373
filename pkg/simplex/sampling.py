import logging

import numpy as np

from config import DEFAULT_FLOOR
from errors import BadFloor, TooShort
from simplex.distribution import ProbabilityDistribution, validate

logger = logging.getLogger(__name__)


def sample(n: int, seed: int, floor: float = DEFAULT_FLOOR) -> ProbabilityDistribution:
    """Draw a point uniformly from the simplex, then lift every weight to at least ``floor``.

    Uniform draws are normalized standard exponentials (flat Dirichlet). The
    lift mixes with the uniform distribution using the smallest weight that
    reaches the floor, so the output stays on the simplex.
    """
    if n < 2:
        raise TooShort(n)
    if not 0.0 < floor < 1.0 / n:
        raise BadFloor(floor, n)

    rng = np.random.default_rng(seed)
    g = rng.standard_exponential(n)
    w = g / g.sum()

    smallest = float(w.min())
    if smallest < floor:
        lam = (floor - smallest) / (1.0 / n - smallest)
        w = (1.0 - lam) * w + lam / n
        w = np.maximum(w, floor)
        logger.debug(f"lifted sample (n={n}, seed={seed}) towards uniform with weight {lam:.3e}")
    return validate(w)
