"""Chains and identities over a pair of distributions."""

from typing import List

import numpy as np

from config import LIMIT_EXPONENTS
from deformed_math import PowerKernel, QuasilinearMode, q_exp, q_log
from divergence_kernels import (
    alpha_div,
    arimoto_div,
    biparam_div,
    hat_div,
    kl,
    quasi_div,
    quasilinear_div,
    renyi_div,
    tsallis_div,
)
from entropy_kernels import arimoto_entropy, biparam_entropy, quasilinear_entropy, tsallis, wada_suyari
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

CONCAVE_KERNELS = ("log", "power", "qlog")


class TsallisQuasilinearDivergenceNonnegative(BaseCheck):
    family = "prop_1_5"
    anchor = "D_q^psi(p||r) >= 0"
    description = "D_q^psi(p||r) >= 0 for concave increasing or convex decreasing psi"
    distributions = 2
    kernels = CONCAVE_KERNELS
    concave_kernel = True

    def chains(self, args: Arguments) -> List[BoundChain]:
        value = quasilinear_div(args.pair, args.kernel, QuasilinearMode.tsallis(args["q"]))
        return [at_most(("0", 0.0), ("D_q^psi", value))]


def _divergence_terms(factor_label: str, base_label: str, center_label: str, factor_log: float, base: float, center: float):
    # factor_log is (1-q) log x at the mean x <= 1; values are on the divergence side
    full = float(np.exp(factor_log))
    half = float(np.exp(factor_log / 2.0))
    return {
        "end": (f"{factor_label} {base_label}", full * base),
        "avg": (f"({factor_label}+1)/2 {base_label}", 0.5 * (full + 1.0) * base),
        "center": (center_label, center),
        "mid": (f"sqrt({factor_label}) {base_label}", half * base),
        "base": (base_label, base),
    }


class QuasilinearDivergenceChain(BaseCheck):
    family = "thm_2_6"
    anchor = "D_q^psi(p||r) vs D_1^psi(p||r)"
    description = "D_q^psi(p||r) bracketed through M = M_psi(r/p) <= 1 and D_1^psi = -log M"
    distributions = 2
    kernels = CONCAVE_KERNELS
    concave_kernel = True

    def chains(self, args: Arguments) -> List[BoundChain]:
        pair, q = args.pair, args["q"]
        m = kernel_mean(args.kernel, pair.r.array / pair.p.array, pair.p)
        d1 = -float(np.log(m))
        center = quasilinear_div(pair, args.kernel, QuasilinearMode.tsallis(q))
        terms = _divergence_terms("M^(1-q)", "D_1^psi", "D_q^psi", -(1.0 - q) * d1, d1, center)
        return [sandwich(q, True, terms, negated=True, descending=q > 1)]


class RenyiTsallisDivergenceExponential(BaseCheck):
    family = "id_eq21"
    anchor = "exp(D_q^R) = exp_{2-q}(D_q^T)"
    description = "exp(D_q^R(p||r)) = exp_{2-q}(D_q^T(p||r))"
    distributions = 2

    def chains(self, args: Arguments) -> List[BoundChain]:
        pair, q = args.pair, args["q"]
        left = float(np.exp(renyi_div(pair, q)))
        right = float(q_exp(tsallis_div(pair, q), 2.0 - q))
        return [identity(("exp D_q^R", left), ("exp_{2-q} D_q^T", right))]


class AlphaTsallisIdentity(BaseCheck):
    family = "id_eq12"
    anchor = "D^(1-2q)(p||r) = D_q^T(p||r) / q"
    description = "alpha-divergence at alpha = 1 - 2q equals D_q^T / q"
    distributions = 2

    def chains(self, args: Arguments) -> List[BoundChain]:
        pair, q = args.pair, args["q"]
        return [identity(("D^(1-2q)", alpha_div(pair, 1.0 - 2.0 * q)), ("D_q^T/q", tsallis_div(pair, q) / q))]


class RenyiTsallisBridge(BaseCheck):
    family = "id_eq13"
    anchor = "D_q^R = log(1 + (q-1) D_q^T) / (q-1)"
    description = "Renyi divergence recovered from the Tsallis divergence"
    distributions = 2

    def chains(self, args: Arguments) -> List[BoundChain]:
        pair, q = args.pair, args["q"]
        bridged = float(np.log1p((q - 1.0) * tsallis_div(pair, q)) / (q - 1.0))
        return [identity(("D_q^R", renyi_div(pair, q)), ("log(1+(q-1)D_q^T)/(q-1)", bridged))]


class RenyiTsallisOrdering(BaseCheck):
    family = "ineq_14_15"
    anchor = "D_q^T vs D_q^R"
    description = "D_q^T <= D_q^R for 0<q<1 and D_q^R <= D_q^T for q>1"
    distributions = 2

    def chains(self, args: Arguments) -> List[BoundChain]:
        pair, q = args.pair, args["q"]
        t = ("D_q^T", tsallis_div(pair, q))
        r = ("D_q^R", renyi_div(pair, q))
        return [at_most(t, r) if q < 1 else at_most(r, t)]


class HatConvexCombination(BaseCheck):
    family = "id_hat_convex"
    anchor = "hat D_{q,r} = a D_q^T + b D_r^T"
    description = "hat D_{q,r} = ((q-1)/(q-r))D_q^T + ((1-r)/(q-r))D_r^T"
    distributions = 2

    def constraints(self, scalars) -> None:
        distinct_indices(self.check_id, scalars)

    def chains(self, args: Arguments) -> List[BoundChain]:
        pair, q, r = args.pair, args["q"], args["r"]
        a = (q - 1.0) / (q - r)
        b = (1.0 - r) / (q - r)
        combined = a * tsallis_div(pair, q) + b * tsallis_div(pair, r)
        return [identity(("hat D_q,r", hat_div(pair, q, r)), ("a D_q^T + b D_r^T", combined))]


class QuasiDivergenceOrdering(BaseCheck):
    family = "lemma_D_ordering"
    anchor = "D_(q) vs D_q^T vs D_1"
    description = (
        "with D_(q) = sum p^q r^{1-q} log(p/r): D_(q) <= D_q^T <= D_1 for 0<q<1, "
        "D_1 <= D_q^T <= D_(q) for q>1"
    )
    distributions = 2

    def chains(self, args: Arguments) -> List[BoundChain]:
        pair, q = args.pair, args["q"]
        terms = [("D_(q)", quasi_div(pair, q)), ("D_q^T", tsallis_div(pair, q)), ("D_1", kl(pair))]
        if q > 1:
            terms.reverse()
        return [BoundChain.of(Relation.NON_DECREASING, terms)]


class HatDivergenceBounds(BaseCheck):
    family = "prop_3_4"
    anchor = "a D_(q) + b D_1 vs hat D_{q,r} vs a D_1 + b D_(r)"
    description = (
        "hat D_{q,r} between a, b combinations of D_1 and quasi-divergences, a = (q-1)/(q-r), "
        "b = (1-r)/(q-r); derived from the D_(q) ordering"
    )
    distributions = 2

    def chains(self, args: Arguments) -> List[BoundChain]:
        pair, q, r = args.pair, args["q"], args["r"]
        a = (q - 1.0) / (q - r)
        b = (1.0 - r) / (q - r)
        d1 = kl(pair)
        if q < 1:
            lower = a * quasi_div(pair, q) + b * d1
            upper = a * d1 + b * quasi_div(pair, r)
        else:
            lower = a * d1 + b * quasi_div(pair, r)
            upper = a * quasi_div(pair, q) + b * d1
        return [BoundChain.of(Relation.NON_DECREASING, [("lower", lower), ("hat D_q,r", hat_div(pair, q, r)), ("upper", upper)])]


class BiparamQuasilinearDivergenceChain(BaseCheck):
    family = "thm_3_5"
    anchor = "D_{r,q}^psi(p||r) vs D_r^psi(p||r)"
    description = (
        "D_{r,q}^psi(p||r) bracketed through D = D_r^psi = -ln_r M_psi(r/p); non-increasing for q>1, "
        "non-decreasing for 0<q<1, as induced by the ln_{r,q} sandwich at x <= 1"
    )
    distributions = 2
    kernels = CONCAVE_KERNELS
    concave_kernel = True

    def chains(self, args: Arguments) -> List[BoundChain]:
        pair, q, r = args.pair, args["q"], args["r"]
        m = kernel_mean(args.kernel, pair.r.array / pair.p.array, pair.p)
        d = -float(q_log(m, r))
        center = quasilinear_div(pair, args.kernel, QuasilinearMode.biparam(r, q))
        terms = _divergence_terms("exp((q-1)D)", "D_r^psi", "D_r,q^psi", (q - 1.0) * d, d, center)
        return [sandwich(q, True, terms, negated=True, descending=q > 1)]


class BiparamOrdering(BaseCheck):
    family = "rem_3_6"
    anchor = "H_r vs H_{r,q}, D_{r,q} vs D_r^T"
    description = "H_r <= H_{r,q} and D_{r,q} <= D_r^T for 0<q<1; both reversed for q>1"
    distributions = 2

    def chains(self, args: Arguments) -> List[BoundChain]:
        pair, q, r = args.pair, args["q"], args["r"]
        h_r = ("H_r", tsallis(pair.p, r))
        h_rq = ("H_r,q", biparam_entropy(pair.p, r, q))
        d_r = ("D_r^T", tsallis_div(pair, r))
        d_rq = ("D_r,q", biparam_div(pair, r, q))
        if q < 1:
            return [at_most(h_r, h_rq), at_most(d_rq, d_r)]
        return [at_most(h_rq, h_r), at_most(d_r, d_rq)]


class BiparamDivergenceNonnegative(BaseCheck):
    family = "biparam_div_nonneg"
    anchor = "D_{r,q}(p||r) >= 0"
    description = "D_{r,q}(p||r) >= 0 for q > 1"
    distributions = 2

    def chains(self, args: Arguments) -> List[BoundChain]:
        return [at_most(("0", 0.0), ("D_r,q", biparam_div(args.pair, args["r"], args["q"])))]


class ArimotoQuasilinearIdentity(BaseCheck):
    family = "id_arimoto"
    anchor = "Arimoto = quasilinear with psi(x) = x^{1-r}"
    description = "Arimoto entropy and divergence equal the ((2r-1)/r, q)-quasilinear forms with psi = x^{1-r}"
    distributions = 2

    def chains(self, args: Arguments) -> List[BoundChain]:
        pair, q, r = args.pair, args["q"], args["r"]
        kernel = PowerKernel.for_index(r)
        mode = QuasilinearMode.biparam((2.0 * r - 1.0) / r, q)
        return [
            identity(("A_r,q", arimoto_entropy(pair.p, r, q)), ("I^x^(1-r)", quasilinear_entropy(pair.p, kernel, mode))),
            identity(("A_r,q div", arimoto_div(pair, r, q)), ("D^x^(1-r)", quasilinear_div(pair, kernel, mode))),
        ]


class ArimotoNonnegative(BaseCheck):
    family = "arimoto_nonneg"
    anchor = "p^r r^{1-r} <= r p + (1-r) r"
    description = "Arimoto-type entropy and divergence are nonnegative"
    distributions = 2

    def chains(self, args: Arguments) -> List[BoundChain]:
        pair, q, r = args.pair, args["q"], args["r"]
        return [
            at_most(("0", 0.0), ("A_r,q", arimoto_entropy(pair.p, r, q))),
            at_most(("0", 0.0), ("A_r,q div", arimoto_div(pair, r, q))),
        ]


class BiparamLimits(BaseCheck):
    family = "id_limits_sec6"
    anchor = "lim_{r -> q} of the biparametric measures"
    description = (
        "max over q = 1 +- 10^-k of |H_{r,q} - S_{r,q}| and of |hat D_{r,q} - D_{r,q}| decays as k grows "
        "and ends below a fixed fraction of its first value"
    )
    distributions = 2

    def chains(self, args: Arguments) -> List[BoundChain]:
        pair, r = args.pair, args["r"]
        entropy_gaps = []
        divergence_gaps = []
        for k in LIMIT_EXPONENTS:
            qs = (1.0 + 10.0 ** -k, 1.0 - 10.0 ** -k)
            entropy_gaps.append((f"H-S k={k}", max(abs(biparam_entropy(pair.p, r, q) - wada_suyari(pair.p, r, q)) for q in qs)))
            divergence_gaps.append((f"hatD-D k={k}", max(abs(hat_div(pair, r, q) - biparam_div(pair, r, q)) for q in qs)))
        chains = []
        for gaps in (entropy_gaps, divergence_gaps):
            chains.append(decay_chain(gaps))
            chains.append(threshold_chain(gaps))
        return chains


CHECKS = [
    TsallisQuasilinearDivergenceNonnegative("prop_1_5", (Q_ANY,)),
    QuasilinearDivergenceChain("thm_2_6_sub", (Q_SUB,)),
    QuasilinearDivergenceChain("thm_2_6_super", (Q_SUPER,)),
    RenyiTsallisDivergenceExponential("id_eq21", (q_spec("q", hi=2.0),)),
    AlphaTsallisIdentity("id_eq12", (Q_ANY,)),
    RenyiTsallisBridge("id_eq13", (Q_ANY,)),
    RenyiTsallisOrdering("ineq_14_15_sub", (Q_SUB,)),
    RenyiTsallisOrdering("ineq_14_15_super", (Q_SUPER,)),
    HatConvexCombination("id_hat_convex", (Q_ANY, R_ANY)),
    QuasiDivergenceOrdering("lemma_D_ordering_sub", (Q_SUB,)),
    QuasiDivergenceOrdering("lemma_D_ordering_super", (Q_SUPER,)),
    HatDivergenceBounds("prop_3_4_sub", (Q_SUB, R_SUPER)),
    HatDivergenceBounds("prop_3_4_super", (Q_SUPER, R_SUB)),
    BiparamQuasilinearDivergenceChain("thm_3_5_sub", (Q_SUB, R_ANY)),
    BiparamQuasilinearDivergenceChain("thm_3_5_super", (Q_SUPER, R_ANY)),
    BiparamOrdering("rem_3_6_sub", (Q_SUB, R_ANY)),
    BiparamOrdering("rem_3_6_super", (Q_SUPER, R_ANY)),
    BiparamDivergenceNonnegative("biparam_div_nonneg", (Q_SUPER, R_ANY)),
    ArimotoQuasilinearIdentity("id_arimoto", (Q_ANY, q_spec("r", lo=0.5))),
    ArimotoNonnegative("arimoto_nonneg", (Q_ANY, R_ANY)),
    BiparamLimits("id_limits_sec6", (R_ANY,)),
]
