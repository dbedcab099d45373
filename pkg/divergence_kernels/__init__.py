from divergence_kernels.measures import (
    alpha_div,
    arimoto_div,
    biparam_div,
    hat_div,
    jeffreys,
    jensen_shannon,
    kl,
    lin,
    quasi_div,
    quasilinear_div,
    renyi_div,
    tsallis_div,
)
from divergence_kernels.registry import DIVERGENCE_REGISTRY, dispatch_divergence

__all__ = [
    "alpha_div",
    "arimoto_div",
    "biparam_div",
    "hat_div",
    "jeffreys",
    "jensen_shannon",
    "kl",
    "lin",
    "quasi_div",
    "quasilinear_div",
    "renyi_div",
    "tsallis_div",
    "DIVERGENCE_REGISTRY",
    "dispatch_divergence",
]
