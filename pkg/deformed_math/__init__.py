from deformed_math.qlog import (
    QIndex,
    Regime,
    biparam_exp,
    biparam_log,
    classify,
    index_value,
    is_limit,
    q_exp,
    q_log,
)
from deformed_math.kernels import (
    KERNEL_REGISTRY,
    BiLogKernel,
    KernelSpec,
    LogKernel,
    PowerKernel,
    PsiKernel,
    QLogKernel,
    psi_eval,
    psi_inverse,
    quasilinear_mean,
)
from deformed_math.bounds import hh_ratio_bounds, qlog_quadrature_oracle
from deformed_math.modes import QuasilinearMode

__all__ = [
    "QIndex",
    "Regime",
    "biparam_exp",
    "biparam_log",
    "classify",
    "index_value",
    "is_limit",
    "q_exp",
    "q_log",
    "KERNEL_REGISTRY",
    "BiLogKernel",
    "KernelSpec",
    "LogKernel",
    "PowerKernel",
    "PsiKernel",
    "QLogKernel",
    "psi_eval",
    "psi_inverse",
    "quasilinear_mean",
    "hh_ratio_bounds",
    "qlog_quadrature_oracle",
    "QuasilinearMode",
]
