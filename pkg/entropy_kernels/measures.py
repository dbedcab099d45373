"""Entropy functionals. All logarithms are natural (nats)."""

import numpy as np

from deformed_math import (
    PsiKernel,
    QuasilinearMode,
    biparam_log,
    index_value,
    is_limit,
    q_log,
    quasilinear_mean,
)
from errors import EqualIndices, LimitIndex, NumericalRangeError
from simplex import ProbabilityDistribution


def _check_finite(value: float, name: str) -> float:
    if not np.isfinite(value):
        raise NumericalRangeError(f"{name} is not finite in double precision")
    return float(value)


def shannon(p: ProbabilityDistribution) -> float:
    w = p.array
    return float(-np.dot(w, np.log(w)))


def tsallis(p: ProbabilityDistribution, q: float) -> float:
    """H_q(p) = Σ p_j ln_q(1/p_j); Shannon in the limit band."""
    w = p.array
    return _check_finite(np.dot(w, q_log(1.0 / w, q)), "tsallis")


def renyi(p: ProbabilityDistribution, q: float) -> float:
    q = index_value(q)
    if is_limit(q):
        raise LimitIndex("q", q)
    w = p.array
    # log Σ p^q = log1p(Σ p (p^{q-1} - 1))
    log_sum = np.log1p(np.dot(w, np.expm1((q - 1.0) * np.log(w))))
    return _check_finite(log_sum / (1.0 - q), "renyi")


def quasi_entropy(p: ProbabilityDistribution, q: float) -> float:
    """G_q(p) = -Σ p_j^q log p_j."""
    q = index_value(q)
    log_w = np.log(p.array)
    return _check_finite(-np.dot(np.exp(q * log_w), log_w), "quasi_entropy")


def quasilinear_entropy(p: ProbabilityDistribution, kernel: PsiKernel, mode: QuasilinearMode = QuasilinearMode()) -> float:
    """outer(ψ^{-1}(Σ p_j ψ(1/p_j))) with outer = log, ln_q or ln_{r,q}."""
    mean = quasilinear_mean(kernel, 1.0 / p.array, p)
    return _check_finite(mode.outer(_check_finite(mean, "quasilinear mean")), "quasilinear_entropy")


def quasilinear_entropy_phi(p: ProbabilityDistribution, kernel: PsiKernel) -> float:
    """Original form -log φ^{-1}(Σ p_j φ(p_j)) with φ on (0, 1]."""
    mean = quasilinear_mean(kernel, p.array, p)
    return _check_finite(-np.log(mean), "quasilinear_entropy_phi")


def wada_suyari(p: ProbabilityDistribution, r: float, q: float) -> float:
    """S_{r,q}(p) = Σ (p_j^q - p_j^r) / (r - q), evaluated as -Σ p_j^q ln_{q-r+1} p_j."""
    r = index_value(r)
    q = index_value(q)
    if r == q:
        raise EqualIndices(q, r)
    log_w = np.log(p.array)
    d = r - q
    return _check_finite(-np.dot(np.exp(q * log_w), np.expm1(d * log_w)) / d, "wada_suyari")


def biparam_entropy(p: ProbabilityDistribution, r: float, q: float) -> float:
    """H_{r,q}(p) = Σ p_j ln_{r,q}(1/p_j)."""
    w = p.array
    return _check_finite(np.dot(w, biparam_log(1.0 / w, r, q)), "biparam_entropy")


def arimoto_outer(log_power_sum: float, r: float, q: float) -> float:
    """ln_q exp((r/(1-r)) (S^{1/r} - 1)) given log S."""
    inner = (r / (1.0 - r)) * np.expm1(log_power_sum / r)
    if is_limit(q):
        return float(inner)
    return float(np.expm1((1.0 - q) * inner) / (1.0 - q))


def arimoto_entropy(p: ProbabilityDistribution, r: float, q: float) -> float:
    r = index_value(r)
    q = index_value(q)
    if is_limit(r):
        raise LimitIndex("r", r)
    w = p.array
    # log Σ p^r = log1p(Σ p (p^{r-1} - 1))
    log_power_sum = np.log1p(np.dot(w, np.expm1((r - 1.0) * np.log(w))))
    return _check_finite(arimoto_outer(log_power_sum, r, q), "arimoto_entropy")


def fermi_dirac(p: ProbabilityDistribution, r: float) -> float:
    """l_r^FD(p) = Σ p_j ln_r(1/p_j) + Σ (1 - p_j) ln_r(1/(1 - p_j))."""
    w = p.array
    holes = 1.0 - w
    return _check_finite(np.dot(w, q_log(1.0 / w, r)) + np.dot(holes, q_log(1.0 / holes, r)), "fermi_dirac")


def bose_einstein(p: ProbabilityDistribution, r: float) -> float:
    """l_r^BE(p) = Σ p_j ln_r(1/p_j) - Σ (1 + p_j) ln_r(1/(1 + p_j))."""
    w = p.array
    crowd = 1.0 + w
    return _check_finite(np.dot(w, q_log(1.0 / w, r)) - np.dot(crowd, q_log(1.0 / crowd, r)), "bose_einstein")
