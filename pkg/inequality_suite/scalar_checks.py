"""Scalar chains for the deformed logarithms ln_q and ln_{r,q}."""

from typing import List

import numpy as np

from deformed_math import biparam_log, q_log
from inequality_suite.chain import BoundChain
from inequality_suite.checks import (
    Q_SUB,
    Q_SUPER,
    R_ANY,
    X_ABOVE,
    X_BELOW,
    Arguments,
    BaseCheck,
    sandwich,
)


class QLogSandwich(BaseCheck):
    family = "lemma_2_1"
    anchor = "ln_q x vs x^{(1-q)/2} log x"
    description = "ln_q x between the Hermite-Hadamard bounds x^{(1-q)/2} log x and ½(x^{1-q} + 1) log x, widened to log x and x^{1-q} log x"

    def chains(self, args: Arguments) -> List[BoundChain]:
        x, q = args["x"], args["q"]
        b = float(np.log(x))
        full = float(np.exp((1.0 - q) * b))
        half = float(np.exp((1.0 - q) * b / 2.0))
        terms = {
            "end": ("x^(1-q) log x", full * b),
            "avg": ("(x^(1-q)+1)/2 log x", 0.5 * (full + 1.0) * b),
            "center": ("ln_q x", float(q_log(x, q))),
            "mid": ("x^((1-q)/2) log x", half * b),
            "base": ("log x", b),
        }
        return [sandwich(q, x < 1.0, terms)]


class BiLogSandwich(BaseCheck):
    family = "lemma_3_3"
    anchor = "ln_{r,q} x vs exp((1-q)/2 ln_r x) ln_r x"
    description = "ln_{r,q} x = ln_q exp(ln_r x) sandwiched by the ln_q bounds taken at exp(ln_r x)"

    def chains(self, args: Arguments) -> List[BoundChain]:
        x, q, r = args["x"], args["q"], args["r"]
        y = float(q_log(x, r))
        full = float(np.exp((1.0 - q) * y))
        half = float(np.exp((1.0 - q) * y / 2.0))
        terms = {
            "end": ("exp((1-q) ln_r x) ln_r x", full * y),
            "avg": ("(exp((1-q) ln_r x)+1)/2 ln_r x", 0.5 * (full + 1.0) * y),
            "center": ("ln_{r,q} x", float(biparam_log(x, r, q))),
            "mid": ("exp((1-q)/2 ln_r x) ln_r x", half * y),
            "base": ("ln_r x", y),
        }
        return [sandwich(q, x < 1.0, terms)]


CHECKS = [
    QLogSandwich("lemma_2_1_I_i", (X_BELOW, Q_SUB)),
    QLogSandwich("lemma_2_1_I_ii", (X_BELOW, Q_SUPER)),
    QLogSandwich("lemma_2_1_II_i", (X_ABOVE, Q_SUB)),
    QLogSandwich("lemma_2_1_II_ii", (X_ABOVE, Q_SUPER)),
    BiLogSandwich("lemma_3_3_I_i", (X_BELOW, Q_SUB, R_ANY)),
    BiLogSandwich("lemma_3_3_I_ii", (X_BELOW, Q_SUPER, R_ANY)),
    BiLogSandwich("lemma_3_3_II_i", (X_ABOVE, Q_SUB, R_ANY)),
    BiLogSandwich("lemma_3_3_II_ii", (X_ABOVE, Q_SUPER, R_ANY)),
]
