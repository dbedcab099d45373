"""Divergence functionals between strictly positive distributions.

Mixed powers p^q r^{1-q} are evaluated as exp(q log p + (1 - q) log r) and
sums of the form Σ p^q r^{1-q} - 1 as Σ p expm1((1 - q) log(r/p)), so that
every divergence vanishes to rounding on identical pairs.
"""

import numpy as np

from config import EPS_Q
from deformed_math import (
    PsiKernel,
    QuasilinearMode,
    biparam_log,
    index_value,
    is_limit,
    q_log,
    quasilinear_mean,
)
from entropy_kernels.measures import arimoto_outer
from errors import BadAlpha, EqualIndices, LimitIndex, NumericalRangeError
from simplex import DivergencePair, mixture


def _check_finite(value: float, name: str) -> float:
    if not np.isfinite(value):
        raise NumericalRangeError(f"{name} is not finite in double precision")
    return float(value)


def _log_ratio(pair: DivergencePair) -> np.ndarray:
    return np.log(pair.r.array) - np.log(pair.p.array)


def _mixed_power(pair: DivergencePair, q: float) -> np.ndarray:
    return np.exp(q * np.log(pair.p.array) + (1.0 - q) * np.log(pair.r.array))


def _power_sum_minus_one(pair: DivergencePair, q: float) -> float:
    # Σ p^q r^{1-q} - 1
    return float(np.dot(pair.p.array, np.expm1((1.0 - q) * _log_ratio(pair))))


def kl(pair: DivergencePair) -> float:
    """D_1(p||r) = -Σ p_j log(r_j / p_j)."""
    return _check_finite(-np.dot(pair.p.array, _log_ratio(pair)), "kl")


def tsallis_div(pair: DivergencePair, q: float) -> float:
    """D_q^T(p||r) = -Σ p_j ln_q(r_j / p_j)."""
    w = pair.p.array
    return _check_finite(-np.dot(w, q_log(pair.r.array / w, q)), "tsallis_div")


def renyi_div(pair: DivergencePair, q: float) -> float:
    q = index_value(q)
    if is_limit(q):
        raise LimitIndex("q", q)
    return _check_finite(np.log1p(_power_sum_minus_one(pair, q)) / (q - 1.0), "renyi_div")


def alpha_div(pair: DivergencePair, alpha: float) -> float:
    """D^(α)(p||r) = (4 / (1 - α²)) (1 - Σ p^{(1-α)/2} r^{(1+α)/2})."""
    alpha = float(alpha)
    if not np.isfinite(alpha) or abs(abs(alpha) - 1.0) <= EPS_Q:
        raise BadAlpha(alpha)
    a = (1.0 - alpha) / 2.0
    return _check_finite(-4.0 / (1.0 - alpha * alpha) * _power_sum_minus_one(pair, a), "alpha_div")


def quasilinear_div(pair: DivergencePair, kernel: PsiKernel, mode: QuasilinearMode = QuasilinearMode()) -> float:
    """-outer(ψ^{-1}(Σ p_j ψ(r_j / p_j))) with outer = log, ln_q or ln_{r,q}."""
    mean = quasilinear_mean(kernel, pair.r.array / pair.p.array, pair.p)
    return _check_finite(-mode.outer(_check_finite(mean, "quasilinear mean")), "quasilinear_div")


def hat_div(pair: DivergencePair, q: float, r: float) -> float:
    """D̂_{q,r}(p||r) = Σ (p^r r^{1-r} - p^q r^{1-q}) / (r - q)."""
    q = index_value(q)
    r = index_value(r)
    if q == r:
        raise EqualIndices(q, r)
    d = r - q
    terms = _mixed_power(pair, q) * np.expm1(-d * _log_ratio(pair)) / d
    return _check_finite(np.sum(terms), "hat_div")


def quasi_div(pair: DivergencePair, q: float) -> float:
    """D_(q)(p||r) = Σ p_j^q r_j^{1-q} log(p_j / r_j); equals kl at q = 1."""
    q = index_value(q)
    return _check_finite(-np.dot(_mixed_power(pair, q), _log_ratio(pair)), "quasi_div")


def biparam_div(pair: DivergencePair, r: float, q: float) -> float:
    """D_{r,q}(p||r) = -Σ p_j ln_{r,q}(r_j / p_j)."""
    w = pair.p.array
    return _check_finite(-np.dot(w, biparam_log(pair.r.array / w, r, q)), "biparam_div")


def arimoto_div(pair: DivergencePair, r: float, q: float) -> float:
    r = index_value(r)
    q = index_value(q)
    if is_limit(r):
        raise LimitIndex("r", r)
    log_power_sum = np.log1p(_power_sum_minus_one(pair, r))
    return _check_finite(-arimoto_outer(log_power_sum, r, q), "arimoto_div")


def jeffreys(pair: DivergencePair) -> float:
    return kl(pair) + kl(pair.swapped())


def jensen_shannon(pair: DivergencePair) -> float:
    m = mixture(pair, 0.5)
    return 0.5 * kl(DivergencePair(pair.p, m)) + 0.5 * kl(DivergencePair(pair.r, m))


def lin(pair: DivergencePair) -> float:
    """Lin's divergence K(p||r) = Σ p_j log(2 p_j / (p_j + r_j)) = D_1(p||m)."""
    return kl(DivergencePair(pair.p, mixture(pair, 0.5)))
