"""Chains and identities over a single distribution."""

from typing import List

import numpy as np

from config import LIMIT_EXPONENTS
from deformed_math import LogKernel, QuasilinearMode, q_exp, q_log
from entropy_kernels import (
    quasi_entropy,
    quasilinear_entropy,
    renyi,
    shannon,
    tsallis,
    wada_suyari,
)
from inequality_suite.chain import BoundChain, Relation
from inequality_suite.checks import (
    Q_ANY,
    Q_SUB,
    Q_SUPER,
    R_ANY,
    R_SUB,
    R_SUPER,
    Arguments,
    BaseCheck,
    at_most,
    decay_chain,
    distinct_indices,
    identity,
    kernel_mean,
    q_spec,
    sandwich,
    threshold_chain,
)

ALL_KERNELS = ("log", "power", "qlog", "bilog")


class TsallisQuasilinearNonnegative(BaseCheck):
    family = "prop_1_3"
    anchor = "I_q^psi(p) >= 0"
    description = "I_q^psi(p) >= 0 for every catalog kernel"
    distributions = 1
    kernels = ALL_KERNELS

    def chains(self, args: Arguments) -> List[BoundChain]:
        q = args["q"]
        value = quasilinear_entropy(args.p, args.kernel, QuasilinearMode.tsallis(q))
        return [at_most(("0", 0.0), ("I_q^psi", value))]


class QuasiEntropyChain(BaseCheck):
    family = "prop_2_2"
    anchor = "H vs G_q vs H_q vs G_{(q+1)/2}"
    description = "Shannon, quasi-entropies G_q and G_{(q+1)/2} bracketing the Tsallis entropy"
    distributions = 1

    def chains(self, args: Arguments) -> List[BoundChain]:
        p, q = args.p, args["q"]
        h = shannon(p)
        g = quasi_entropy(p, q)
        inner = [
            ("(H+G_q)/2", 0.5 * (h + g)),
            ("H_q", tsallis(p, q)),
            ("G_(q+1)/2", quasi_entropy(p, (q + 1.0) / 2.0)),
        ]
        if q > 1:
            terms = [("H", h), *inner, ("G_q", g)]
        else:
            terms = [("G_q", g), *inner, ("H", h)]
        return [BoundChain.of(Relation.NON_INCREASING, terms)]


def _entropy_terms(m_label: str, base_label: str, center_label: str, q: float, base: float, center: float, log_m: float):
    full = float(np.exp((1.0 - q) * log_m))
    half = float(np.exp((1.0 - q) * log_m / 2.0))
    return {
        "end": (f"{m_label}^(1-q) {base_label}", full * base),
        "avg": (f"({m_label}^(1-q)+1)/2 {base_label}", 0.5 * (full + 1.0) * base),
        "center": (center_label, center),
        "mid": (f"{m_label}^((1-q)/2) {base_label}", half * base),
        "base": (base_label, base),
    }


class QuasilinearEntropyChain(BaseCheck):
    family = "thm_2_3"
    anchor = "I_q^psi(p) vs I_1^psi(p)"
    description = "I_q^psi(p) bracketed through M = M_psi(1/p) >= 1 and I_1^psi(p) = log M"
    distributions = 1
    kernels = ALL_KERNELS

    def chains(self, args: Arguments) -> List[BoundChain]:
        q = args["q"]
        m = kernel_mean(args.kernel, 1.0 / args.p.array, args.p)
        log_m = float(np.log(m))
        center = quasilinear_entropy(args.p, args.kernel, QuasilinearMode.tsallis(q))
        terms = _entropy_terms("M", "I_1", "I_q", q, log_m, center, log_m)
        return [sandwich(q, False, terms, descending=q < 1)]


class ShannonExponentialChain(BaseCheck):
    family = "cor_2_4"
    anchor = "H_q vs exp((1-q)H) H"
    description = "log kernel: H_q of exp(H) bracketed by exp((1-q)H) multiples of H"
    distributions = 1

    def chains(self, args: Arguments) -> List[BoundChain]:
        q = args["q"]
        h = shannon(args.p)
        center = quasilinear_entropy(args.p, LogKernel(), QuasilinearMode.tsallis(q))
        terms = _entropy_terms("exp(H)", "H", "I_q^log(p)", q, h, center, h)
        return [sandwich(q, False, terms, descending=q < 1)]


class RenyiTsallisChain(BaseCheck):
    family = "cor_2_5"
    anchor = "H_q vs exp((1-q)R_q) R_q"
    description = "power kernel x^{1-q}: H_q bracketed by exp((1-q)R_q) multiples of R_q"
    distributions = 1

    def chains(self, args: Arguments) -> List[BoundChain]:
        q = args["q"]
        r_q = renyi(args.p, q)
        terms = _entropy_terms("exp(R_q)", "R_q", "H_q", q, r_q, tsallis(args.p, q), r_q)
        return [sandwich(q, False, terms, descending=q < 1)]


class RenyiTsallisExponential(BaseCheck):
    family = "id_eq17"
    anchor = "exp(R_q) = exp_q(H_q)"
    description = "exp(R_q(p)) = exp_q(H_q(p))"
    distributions = 1

    def chains(self, args: Arguments) -> List[BoundChain]:
        q = args["q"]
        return [identity(("exp R_q", float(np.exp(renyi(args.p, q)))), ("exp_q H_q", float(q_exp(tsallis(args.p, q), q))))]


class PowerSumIdentity(BaseCheck):
    family = "id_eq18"
    anchor = "1 + (1-q)H_q(p) = sum p^q"
    description = "1 + (1-q)H_q(p) equals sum p_j^q, which is positive"
    distributions = 1

    def chains(self, args: Arguments) -> List[BoundChain]:
        q = args["q"]
        power_sum = float(np.sum(np.exp(q * np.log(args.p.array))))
        return [
            identity(("1+(1-q)H_q", 1.0 + (1.0 - q) * tsallis(args.p, q)), ("sum p^q", power_sum)),
            at_most(("0", 0.0), ("sum p^q", power_sum)),
        ]


class WadaSuyariConvexCombination(BaseCheck):
    family = "id_S_convex"
    anchor = "S_{r,q} = a H_q + b H_r"
    description = "S_{r,q} = ((q-1)/(q-r))H_q + ((1-r)/(q-r))H_r"
    distributions = 1

    def constraints(self, scalars) -> None:
        distinct_indices(self.check_id, scalars)

    def chains(self, args: Arguments) -> List[BoundChain]:
        p, q, r = args.p, args["q"], args["r"]
        a = (q - 1.0) / (q - r)
        b = (1.0 - r) / (q - r)
        return [identity(("S_r,q", wada_suyari(p, r, q)), ("a H_q + b H_r", a * tsallis(p, q) + b * tsallis(p, r)))]


class WadaSuyariBounds(BaseCheck):
    family = "prop_3_1"
    anchor = "S_{r,q} vs H, G_q, G_r"
    description = "S_{r,q} between combinations of H and quasi-entropies (q>1>r, or the swap r>1>q)"
    distributions = 1

    def chains(self, args: Arguments) -> List[BoundChain]:
        p, q, r = args.p, args["q"], args["r"]
        # the statement is symmetric under swapping r and q
        big, small = (q, r) if q > 1 else (r, q)
        d = big - small
        h = shannon(p)
        upper = ((2.0 * big - small - 1.0) / (2.0 * d)) * h + ((1.0 - small) / (2.0 * d)) * quasi_entropy(p, small)
        lower = ((big - 1.0) / d) * quasi_entropy(p, big) + ((1.0 - small) / d) * quasi_entropy(p, (small + 1.0) / 2.0)
        return [BoundChain.of(Relation.NON_INCREASING, [("upper", upper), ("S_r,q", wada_suyari(p, r, q)), ("lower", lower)])]


class BiparamQuasilinearEntropyChain(BaseCheck):
    family = "thm_3_4"
    anchor = "I_{r,q}^psi(p) vs I_r^psi(p)"
    description = (
        "I_{r,q}^psi(p) bracketed through y = I_r^psi(p) = ln_r M_psi(1/p); the chain is the one "
        "induced by the ln_{r,q} sandwich at x = M_psi(1/p) >= 1"
    )
    distributions = 1
    kernels = ALL_KERNELS

    def chains(self, args: Arguments) -> List[BoundChain]:
        q, r = args["q"], args["r"]
        m = kernel_mean(args.kernel, 1.0 / args.p.array, args.p)
        y = float(q_log(m, r))
        center = quasilinear_entropy(args.p, args.kernel, QuasilinearMode.biparam(r, q))
        terms = _entropy_terms("exp(I_r)", "I_r", "I_r,q", q, y, center, y)
        return [sandwich(q, False, terms)]


class WadaSuyariLimit(BaseCheck):
    family = "id_S_limit"
    anchor = "lim_{r -> q} S_{r,q} = G_q"
    description = "max over r = q +- 10^-k of |S_{r,q} - G_q| decays as k grows and ends below a fixed fraction of its first value"
    distributions = 1

    def chains(self, args: Arguments) -> List[BoundChain]:
        p, q = args.p, args["q"]
        g = quasi_entropy(p, q)
        deviations = [
            (f"k={k}", max(abs(wada_suyari(p, q + sign * 10.0 ** -k, q) - g) for sign in (1.0, -1.0)))
            for k in LIMIT_EXPONENTS
        ]
        return [decay_chain(deviations), threshold_chain(deviations)]


CHECKS = [
    TsallisQuasilinearNonnegative("prop_1_3", (Q_ANY,)),
    QuasiEntropyChain("prop_2_2_sub", (Q_SUB,)),
    QuasiEntropyChain("prop_2_2_super", (Q_SUPER,)),
    QuasilinearEntropyChain("thm_2_3_sub", (Q_SUB,)),
    QuasilinearEntropyChain("thm_2_3_super", (Q_SUPER,)),
    ShannonExponentialChain("cor_2_4_sub", (Q_SUB,)),
    ShannonExponentialChain("cor_2_4_super", (Q_SUPER,)),
    RenyiTsallisChain("cor_2_5_sub", (Q_SUB,)),
    RenyiTsallisChain("cor_2_5_super", (Q_SUPER,)),
    RenyiTsallisExponential("id_eq17", (Q_ANY,)),
    PowerSumIdentity("id_eq18", (Q_ANY,)),
    WadaSuyariConvexCombination("id_S_convex", (Q_ANY, R_ANY)),
    WadaSuyariBounds("prop_3_1_super", (Q_SUPER, R_SUB)),
    WadaSuyariBounds("prop_3_1_sub", (Q_SUB, R_SUPER)),
    BiparamQuasilinearEntropyChain("thm_3_4_sub", (Q_SUB, R_ANY)),
    BiparamQuasilinearEntropyChain("thm_3_4_super", (Q_SUPER, R_ANY)),
    WadaSuyariLimit("id_S_limit", (q_spec("q", lo=0.01),)),
]
