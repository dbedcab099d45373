"""Name registry for the divergence functionals exposed on the command line."""

from typing import Dict, Tuple

from divergence_kernels import measures
from entropy_kernels.registry import MeasureParams
from errors import BadParameter
from simplex import DivergencePair


class BaseDivergence:
    parameters: Tuple[str, ...] = ()

    def run(self, pair: DivergencePair, params: MeasureParams) -> float:
        raise NotImplementedError()


class KLDivergence(BaseDivergence):
    def run(self, pair, params):
        return measures.kl(pair)


class TsallisDivergence(BaseDivergence):
    parameters = ("q",)

    def run(self, pair, params):
        return measures.tsallis_div(pair, params.require("q", "tsallis"))


class RenyiDivergence(BaseDivergence):
    parameters = ("q",)

    def run(self, pair, params):
        return measures.renyi_div(pair, params.require("q", "renyi"))


class AlphaDivergence(BaseDivergence):
    parameters = ("alpha",)

    def run(self, pair, params):
        return measures.alpha_div(pair, params.require("alpha", "alpha"))


class QuasilinearDivergence(BaseDivergence):
    parameters = ("kernel", "mode", "q", "r")

    def run(self, pair, params):
        kernel = params.require("kernel", "quasilinear").build()
        return measures.quasilinear_div(pair, kernel, params.quasilinear_mode())


class HatDivergence(BaseDivergence):
    parameters = ("q", "r")

    def run(self, pair, params):
        return measures.hat_div(pair, params.require("q", "hat"), params.require("r", "hat"))


class QuasiDivergence(BaseDivergence):
    parameters = ("q",)

    def run(self, pair, params):
        return measures.quasi_div(pair, params.require("q", "quasi"))


class BiparamDivergence(BaseDivergence):
    parameters = ("r", "q")

    def run(self, pair, params):
        return measures.biparam_div(pair, params.require("r", "biparam"), params.require("q", "biparam"))


class ArimotoDivergence(BaseDivergence):
    parameters = ("r", "q")

    def run(self, pair, params):
        return measures.arimoto_div(pair, params.require("r", "arimoto"), params.require("q", "arimoto"))


class JeffreysDivergence(BaseDivergence):
    def run(self, pair, params):
        return measures.jeffreys(pair)


class JensenShannonDivergence(BaseDivergence):
    def run(self, pair, params):
        return measures.jensen_shannon(pair)


class LinDivergence(BaseDivergence):
    def run(self, pair, params):
        return measures.lin(pair)


DIVERGENCE_REGISTRY: Dict[str, BaseDivergence] = {
    "kl": KLDivergence(),
    "tsallis": TsallisDivergence(),
    "renyi": RenyiDivergence(),
    "alpha": AlphaDivergence(),
    "quasilinear": QuasilinearDivergence(),
    "hat": HatDivergence(),
    "quasi": QuasiDivergence(),
    "biparam": BiparamDivergence(),
    "arimoto": ArimotoDivergence(),
    "jeffreys": JeffreysDivergence(),
    "jensen-shannon": JensenShannonDivergence(),
    "lin": LinDivergence(),
}


def dispatch_divergence(name: str, pair: DivergencePair, params: MeasureParams) -> float:
    handler = DIVERGENCE_REGISTRY.get(name)
    if handler is None:
        raise BadParameter("measure", name, "one of " + ", ".join(sorted(DIVERGENCE_REGISTRY)))
    return handler.run(pair, params)
