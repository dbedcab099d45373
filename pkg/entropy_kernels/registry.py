"""Name registry for the entropy functionals exposed on the command line."""

from typing import Dict, Literal, Optional, Tuple

from pydantic import BaseModel

from deformed_math import KernelSpec, QuasilinearMode
from entropy_kernels import measures
from errors import BadParameter
from simplex import ProbabilityDistribution


class MeasureParams(BaseModel):
    """Parameters a caller may pass to a named measure."""

    q: Optional[float] = None
    r: Optional[float] = None
    alpha: Optional[float] = None
    kernel: Optional[KernelSpec] = None
    mode: Literal["plain", "tsallis", "biparam"] = "plain"

    def require(self, name: str, measure: str):
        value = getattr(self, name)
        if value is None:
            raise BadParameter(name, None, f"a value for measure {measure}")
        return value

    def quasilinear_mode(self) -> QuasilinearMode:
        if self.mode == "plain":
            return QuasilinearMode.plain()
        if self.mode == "tsallis":
            return QuasilinearMode.tsallis(self.require("q", "quasilinear"))
        return QuasilinearMode.biparam(self.require("r", "quasilinear"), self.require("q", "quasilinear"))

    def used(self, names: Tuple[str, ...]) -> Dict[str, object]:
        out: Dict[str, object] = {}
        for name in names:
            value = getattr(self, name)
            if name == "kernel" and value is not None:
                value = value.model_dump(exclude_none=True)
            if value is not None:
                out[name] = value
        return out


class BaseEntropy:
    parameters: Tuple[str, ...] = ()

    def run(self, p: ProbabilityDistribution, params: MeasureParams) -> float:
        raise NotImplementedError()


class ShannonEntropy(BaseEntropy):
    def run(self, p, params):
        return measures.shannon(p)


class TsallisEntropy(BaseEntropy):
    parameters = ("q",)

    def run(self, p, params):
        return measures.tsallis(p, params.require("q", "tsallis"))


class RenyiEntropy(BaseEntropy):
    parameters = ("q",)

    def run(self, p, params):
        return measures.renyi(p, params.require("q", "renyi"))


class QuasiEntropy(BaseEntropy):
    parameters = ("q",)

    def run(self, p, params):
        return measures.quasi_entropy(p, params.require("q", "quasi-entropy"))


class QuasilinearEntropy(BaseEntropy):
    """ψ comes from ``kernel``; ``mode`` picks the outer logarithm (q, r feed the mode)."""

    parameters = ("kernel", "mode", "q", "r")

    def run(self, p, params):
        kernel = params.require("kernel", "quasilinear").build()
        return measures.quasilinear_entropy(p, kernel, params.quasilinear_mode())


class WadaSuyariEntropy(BaseEntropy):
    parameters = ("r", "q")

    def run(self, p, params):
        return measures.wada_suyari(p, params.require("r", "wada-suyari"), params.require("q", "wada-suyari"))


class BiparamEntropy(BaseEntropy):
    parameters = ("r", "q")

    def run(self, p, params):
        return measures.biparam_entropy(p, params.require("r", "biparam"), params.require("q", "biparam"))


class ArimotoEntropy(BaseEntropy):
    parameters = ("r", "q")

    def run(self, p, params):
        return measures.arimoto_entropy(p, params.require("r", "arimoto"), params.require("q", "arimoto"))


class FermiDiracEntropy(BaseEntropy):
    parameters = ("r",)

    def run(self, p, params):
        return measures.fermi_dirac(p, params.require("r", "fermi-dirac"))


class BoseEinsteinEntropy(BaseEntropy):
    parameters = ("r",)

    def run(self, p, params):
        return measures.bose_einstein(p, params.require("r", "bose-einstein"))


ENTROPY_REGISTRY: Dict[str, BaseEntropy] = {
    "shannon": ShannonEntropy(),
    "tsallis": TsallisEntropy(),
    "renyi": RenyiEntropy(),
    "quasi-entropy": QuasiEntropy(),
    "quasilinear": QuasilinearEntropy(),
    "wada-suyari": WadaSuyariEntropy(),
    "biparam": BiparamEntropy(),
    "arimoto": ArimotoEntropy(),
    "fermi-dirac": FermiDiracEntropy(),
    "bose-einstein": BoseEinsteinEntropy(),
}


def dispatch_entropy(name: str, p: ProbabilityDistribution, params: MeasureParams) -> float:
    handler = ENTROPY_REGISTRY.get(name)
    if handler is None:
        raise BadParameter("measure", name, "one of " + ", ".join(sorted(ENTROPY_REGISTRY)))
    return handler.run(p, params)
