from entropy_kernels.measures import (
    arimoto_entropy,
    biparam_entropy,
    bose_einstein,
    fermi_dirac,
    quasi_entropy,
    quasilinear_entropy,
    quasilinear_entropy_phi,
    renyi,
    shannon,
    tsallis,
    wada_suyari,
)
from entropy_kernels.registry import ENTROPY_REGISTRY, MeasureParams, dispatch_entropy

__all__ = [
    "arimoto_entropy",
    "biparam_entropy",
    "bose_einstein",
    "fermi_dirac",
    "quasi_entropy",
    "quasilinear_entropy",
    "quasilinear_entropy_phi",
    "renyi",
    "shannon",
    "tsallis",
    "wada_suyari",
    "ENTROPY_REGISTRY",
    "MeasureParams",
    "dispatch_entropy",
]
