"""Inequalities for divergences against mixtures: hypodivergence, Lin, Jeffreys and Jensen-Shannon."""

from typing import List

from deformed_math import q_log
from divergence_kernels import jeffreys, jensen_shannon, kl, lin, tsallis_div
from inequality_suite.chain import BoundChain, Relation
from inequality_suite.checks import Q_ANY, Q_SUB, Q_SUPER, V_ONE, V_OPEN, Arguments, BaseCheck, at_most
from simplex import DivergencePair, mixture


class Hypodivergence(BaseCheck):
    family = "hypodiv"
    anchor = "D_q^T(p||m) <= D_{(1+q)/2}^T(p||r) / 2"
    description = "D_q^T(p||(p+r)/2) <= ½ D_{(1+q)/2}^T(p||r)"
    distributions = 2

    def chains(self, args: Arguments) -> List[BoundChain]:
        pair, q = args.pair, args["q"]
        half = DivergencePair(pair.p, mixture(pair, 0.5))
        return [at_most(("D_q^T(p||m)", tsallis_div(half, q)), ("½D_(1+q)/2^T(p||r)", 0.5 * tsallis_div(pair, (1.0 + q) / 2.0)))]


class MixtureChain(BaseCheck):
    family = "thm_4_1"
    anchor = "D_q^T(p||(1-v)p + vr) vs v D_{1-(1-q)v}^T(p||r)"
    description = (
        "D_q^T(p||(1-v)p+vr) <= v D_{1-(1-q)v}^T(p||r) <= (1/v) D_q^T(vp+(1-v)r||r) + ((1-v)/v) ln_q(1/(1-v)); "
        "the same direction holds for q > 1"
    )
    distributions = 2

    def chains(self, args: Arguments) -> List[BoundChain]:
        pair, q, v = args.pair, args["q"], args["v"]
        toward_r = DivergencePair(pair.p, mixture(pair, v))
        toward_p = DivergencePair(mixture(pair, 1.0 - v), pair.r)
        upper = tsallis_div(toward_p, q) / v + (1.0 - v) / v * float(q_log(1.0 / (1.0 - v), q))
        return [
            BoundChain.of(
                Relation.NON_DECREASING,
                [
                    ("D_q^T(p||(1-v)p+vr)", tsallis_div(toward_r, q)),
                    ("v D_1-(1-q)v^T(p||r)", v * tsallis_div(pair, 1.0 - (1.0 - q) * v)),
                    ("upper", upper),
                ],
            )
        ]


class MixtureBoundary(BaseCheck):
    family = "thm_4_1"
    anchor = "D_q^T(p||r) <= D_q^T(p||r) at v = 1"
    description = "first inequality of the mixture chain at v = 1, where the mixture is r and the index is q"
    distributions = 2

    def chains(self, args: Arguments) -> List[BoundChain]:
        pair, q, v = args.pair, args["q"], args["v"]
        toward_r = DivergencePair(pair.p, mixture(pair, v))
        return [at_most(("D_q^T(p||(1-v)p+vr)", tsallis_div(toward_r, q)), ("v D_1-(1-q)v^T(p||r)", v * tsallis_div(pair, 1.0 - (1.0 - q) * v)))]


class LinHalf(BaseCheck):
    family = "lin_half"
    anchor = "D_1(p||m) <= D_1(p||r) / 2"
    description = "D_1(p||m) <= ½ D_1(p||r) and D_1(r||m) <= ½ D_1(r||p) with m = (p+r)/2"
    distributions = 2

    def chains(self, args: Arguments) -> List[BoundChain]:
        pair = args.pair
        swapped = pair.swapped()
        return [
            at_most(("D_1(p||m)", lin(pair)), ("½D_1(p||r)", 0.5 * kl(pair))),
            at_most(("D_1(r||m)", lin(swapped)), ("½D_1(r||p)", 0.5 * kl(swapped))),
        ]


class JensenShannonQuarter(BaseCheck):
    family = "js_quarter"
    anchor = "JS_1 <= J_1 / 4"
    description = "JS_1(p||r) <= J_1(p||r)/4"
    distributions = 2

    def chains(self, args: Arguments) -> List[BoundChain]:
        pair = args.pair
        return [at_most(("JS_1", jensen_shannon(pair)), ("J_1/4", 0.25 * jeffreys(pair)))]


class LinDifference(BaseCheck):
    family = "prop_4_2"
    anchor = "D_1(p||m) - D_1(r||m) <= D_1(p||r)"
    description = "D_1(p||m) - D_1(r||m) <= D_1(p||r)"
    distributions = 2

    def chains(self, args: Arguments) -> List[BoundChain]:
        pair = args.pair
        return [at_most(("D_1(p||m)-D_1(r||m)", lin(pair) - lin(pair.swapped())), ("D_1(p||r)", kl(pair)))]


CHECKS = [
    Hypodivergence("hypodiv", (Q_ANY,)),
    MixtureChain("thm_4_1_sub", (Q_SUB, V_OPEN)),
    MixtureChain("thm_4_1_super", (Q_SUPER, V_OPEN)),
    MixtureBoundary("thm_4_1_boundary", (Q_ANY, V_ONE)),
    LinHalf("lin_half"),
    JensenShannonQuarter("js_quarter"),
    LinDifference("prop_4_2"),
]
