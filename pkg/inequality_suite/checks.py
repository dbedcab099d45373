"""Base class for catalog checks: parameter domains, binding and sampling.

A check turns a :class:`CheckInstance` into one or more :class:`BoundChain`
objects. Its first chain is the displayed statement; further chains carry
companion statements evaluated on the same instance.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from config import EPS_Q, LIMIT_FRACTION
from deformed_math import KernelSpec, PsiKernel, quasilinear_mean
from errors import BadConfig, BadParameter, DomainError, NumericalRangeError, ParameterOutOfDomain
from inequality_suite.chain import BoundChain, Relation
from inequality_suite.models import CampaignConfig, CheckInfo, CheckInstance
from simplex import DivergencePair, ProbabilityDistribution, sample

logger = logging.getLogger(__name__)

# Attempts at drawing a scalar that falls strictly inside its open domain.
_DRAW_ATTEMPTS = 16


def _fmt(value: float) -> str:
    return f"{value:g}"


@dataclass(frozen=True)
class ParamSpec:
    """Open interval lo < value < hi, optionally excluding the limit point 1,
    or the single value ``fixed``.

    ``source`` names the campaign range the sampler draws from; ``band``
    removes (1 - band, 1 + band) from it as configured by the campaign.
    """

    name: str
    lo: float = 0.0
    hi: float = math.inf
    source: Optional[str] = None
    avoid_one: bool = True
    band: bool = False
    log_scale: bool = False
    fixed: Optional[float] = None

    def contains(self, value: float) -> bool:
        if self.fixed is not None:
            return value == self.fixed
        if not math.isfinite(value) or not self.lo < value < self.hi:
            return False
        return not (self.avoid_one and abs(value - 1.0) <= EPS_Q)

    def describe(self) -> str:
        if self.fixed is not None:
            return f"{self.name} = {_fmt(self.fixed)}"
        if math.isinf(self.hi):
            text = f"{self.name} > {_fmt(self.lo)}"
        else:
            text = f"{_fmt(self.lo)} < {self.name} < {_fmt(self.hi)}"
        if self.avoid_one and self.lo < 1.0 < self.hi:
            text += f", {self.name} != 1"
        return text

    def segments(self, cfg: CampaignConfig) -> List[Tuple[float, float]]:
        lo, hi = getattr(cfg, f"{self.source or self.name}_range")
        lo, hi = max(lo, self.lo), min(hi, self.hi)
        if lo > hi:
            return []
        if not self.band:
            return [(lo, hi)]
        cut_lo, cut_hi = 1.0 - cfg.band, 1.0 + cfg.band
        pieces = [(lo, min(hi, cut_lo)), (max(lo, cut_hi), hi)]
        return [(a, b) for a, b in pieces if a <= b]

    def draw(self, rng: np.random.Generator, cfg: CampaignConfig, check_id: str) -> float:
        if self.fixed is not None:
            return self.fixed
        segments = self.segments(cfg)
        if not segments:
            raise BadConfig(f"{check_id}: the configured {self.source or self.name}_range leaves no admissible {self.name} ({self.describe()})")
        if self.log_scale:
            segments = [(math.log(a), math.log(b)) for a, b in segments]
        lengths = np.array([b - a for a, b in segments])
        cumulative = np.cumsum(lengths)
        total = float(cumulative[-1])
        for _ in range(_DRAW_ATTEMPTS):
            if total > 0:
                u = rng.uniform(0.0, total)
                index = min(int(np.searchsorted(cumulative, u, side="right")), len(segments) - 1)
                value = segments[index][1] - (float(cumulative[index]) - u)
            else:
                value = segments[0][0]
            if self.log_scale:
                value = math.exp(value)
            if self.contains(value):
                return float(value)
        raise BadConfig(f"{check_id}: could not draw {self.name} inside {self.describe()} from the configured range")


def q_spec(name: str = "q", lo: float = 0.0, hi: float = math.inf) -> ParamSpec:
    return ParamSpec(name, lo, hi, source=name, band=True)


Q_ANY = q_spec("q")
Q_SUB = q_spec("q", hi=1.0)
Q_SUPER = q_spec("q", lo=1.0)
R_ANY = q_spec("r")
R_SUB = q_spec("r", hi=1.0)
R_SUPER = q_spec("r", lo=1.0)
X_BELOW = ParamSpec("x", 0.0, 1.0, log_scale=True)
X_ABOVE = ParamSpec("x", 1.0, math.inf, log_scale=True)
V_OPEN = ParamSpec("v", 0.0, 1.0, avoid_one=False)
V_ONE = ParamSpec("v", avoid_one=False, fixed=1.0)


@dataclass(frozen=True)
class Arguments:
    distributions: Tuple[ProbabilityDistribution, ...]
    scalars: Dict[str, float]
    kernel: Optional[PsiKernel] = None

    def __getitem__(self, name: str) -> float:
        return self.scalars[name]

    @property
    def p(self) -> ProbabilityDistribution:
        return self.distributions[0]

    @property
    def pair(self) -> DivergencePair:
        return DivergencePair(self.distributions[0], self.distributions[1])


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    chains: Tuple[BoundChain, ...]
    passed: bool
    slack: float

    @property
    def chain(self) -> BoundChain:
        return self.chains[0]


class BaseCheck:
    family: str = ""
    anchor: str = ""
    description: str = ""
    distributions: int = 0
    kernels: Tuple[str, ...] = ()
    concave_kernel: bool = False

    def __init__(self, check_id: str, params: Sequence[ParamSpec] = ()):
        self.check_id = check_id
        self.params = tuple(params)

    def chains(self, args: Arguments) -> List[BoundChain]:
        raise NotImplementedError()

    def constraints(self, scalars: Dict[str, float]) -> None:
        """Cross-parameter conditions; raise ParameterOutOfDomain on failure."""

    def bind(self, inst: CheckInstance) -> Arguments:
        if len(inst.distributions) != self.distributions:
            raise ParameterOutOfDomain(self.check_id, "distributions", len(inst.distributions), f"exactly {self.distributions}")
        dists = tuple(inst.parsed())
        if len(dists) == 2:
            DivergencePair(*dists)

        expected = {spec.name: spec for spec in self.params}
        for name, value in inst.scalars.items():
            if name not in expected:
                raise ParameterOutOfDomain(self.check_id, name, value, "not a parameter of this check")
        for name, spec in expected.items():
            if name not in inst.scalars:
                raise ParameterOutOfDomain(self.check_id, name, None, spec.describe())
            if not spec.contains(inst.scalars[name]):
                raise ParameterOutOfDomain(self.check_id, name, inst.scalars[name], spec.describe())
        scalars = {name: float(value) for name, value in inst.scalars.items()}
        self.constraints(scalars)

        return Arguments(dists, scalars, self._bind_kernel(inst.kernel))

    def _bind_kernel(self, spec: Optional[KernelSpec]) -> Optional[PsiKernel]:
        if not self.kernels:
            if spec is not None:
                raise ParameterOutOfDomain(self.check_id, "kernel", spec.family, "no kernel")
            return None
        if spec is None or spec.family not in self.kernels:
            raise ParameterOutOfDomain(self.check_id, "kernel", spec and spec.family, "one of " + ", ".join(self.kernels))
        try:
            kernel = spec.build()
        except BadParameter as e:
            raise ParameterOutOfDomain(self.check_id, "kernel", spec.model_dump(exclude_none=True), str(e)) from e
        if self.concave_kernel and not kernel.concave_increasing_or_convex_decreasing:
            raise ParameterOutOfDomain(self.check_id, "kernel", kernel.describe(), "a concave increasing or convex decreasing kernel")
        return kernel

    def accepts(self, inst: CheckInstance) -> bool:
        try:
            self.bind(inst.with_id(self.check_id))
        except ParameterOutOfDomain:
            return False
        return True

    def evaluate(self, inst: CheckInstance, tol: float) -> CheckResult:
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            chains = tuple(self.chains(self.bind(inst)))
        return CheckResult(
            check_id=self.check_id,
            chains=chains,
            passed=all(chain.verify(tol) for chain in chains),
            slack=min(chain.slack for chain in chains),
        )

    def sample(self, rng: np.random.Generator, cfg: CampaignConfig) -> CheckInstance:
        n = int(rng.integers(cfg.n_range[0], cfg.n_range[1] + 1))
        dists = [sample(n, int(rng.integers(0, 2**63)), cfg.floor).to_list() for _ in range(self.distributions)]
        scalars = {spec.name: spec.draw(rng, cfg, self.check_id) for spec in self.params}
        kernel = self._sample_kernel(rng, cfg) if self.kernels else None
        return CheckInstance(check_id=self.check_id, distributions=dists, scalars=scalars, kernel=kernel)

    def _sample_kernel(self, rng: np.random.Generator, cfg: CampaignConfig) -> KernelSpec:
        family = self.kernels[int(rng.integers(len(self.kernels)))]
        if family == "log":
            return KernelSpec(family="log")
        s = q_spec("q").draw(rng, cfg, self.check_id)
        if family == "power":
            return KernelSpec(family="power", exponent=1.0 - s)
        if family == "qlog":
            return KernelSpec(family="qlog", q=s)
        return KernelSpec(family="bilog", r=q_spec("r").draw(rng, cfg, self.check_id), q=s)

    def info(self) -> CheckInfo:
        return CheckInfo(
            check_id=self.check_id,
            family=self.family,
            anchor=self.anchor,
            description=self.description,
            distributions=self.distributions,
            parameters={spec.name: spec.describe() for spec in self.params},
            kernels=list(self.kernels),
        )


def kernel_mean(kernel: PsiKernel, values, weights: ProbabilityDistribution) -> float:
    """Quasilinear mean whose failures in double precision become NumericalRangeError."""
    try:
        mean = quasilinear_mean(kernel, values, weights)
    except NumericalRangeError:
        raise
    except DomainError as e:
        raise NumericalRangeError(f"quasilinear mean under {kernel.describe()} left double precision: {e}") from e
    if not np.isfinite(mean) or mean <= 0:
        raise NumericalRangeError(f"quasilinear mean under {kernel.describe()} is {mean!r}")
    return mean


def sandwich(q: float, below_one: bool, terms: Dict[str, Tuple[str, float]], negated: bool = False, descending: bool = False) -> BoundChain:
    """Five-term chain produced by the Hermite-Hadamard bounds on ln_q.

    ``terms`` maps the keys ``end`` (x^{1-q} b), ``avg`` (½(x^{1-q} + 1) b),
    ``center`` (the deformed value), ``mid`` (x^{(1-q)/2} b) and ``base`` (b)
    to labelled values. Set ``negated`` when every value is the negative of
    the logarithmic side, as for divergences.
    """
    middle = ["avg", "center", "mid"] if below_one else ["mid", "center", "avg"]
    keys = ["base", *middle, "end"] if q < 1 else ["end", *middle, "base"]
    if negated:
        keys.reverse()
    relation = Relation.NON_DECREASING
    if descending:
        keys.reverse()
        relation = Relation.NON_INCREASING
    return BoundChain.of(relation, [terms[key] for key in keys])


def identity(left: Tuple[str, float], right: Tuple[str, float]) -> BoundChain:
    return BoundChain.of(Relation.EQUAL, [left, right])


def at_most(lower: Tuple[str, float], upper: Tuple[str, float]) -> BoundChain:
    return BoundChain.of(Relation.NON_DECREASING, [lower, upper])


def decay_chain(deviations: Sequence[Tuple[str, float]]) -> BoundChain:
    return BoundChain.of(Relation.NON_INCREASING, deviations)


def threshold_chain(deviations: Sequence[Tuple[str, float]]) -> BoundChain:
    """The last deviation is at most LIMIT_FRACTION times the first."""
    first_label, first = deviations[0]
    last_label, last = deviations[-1]
    return at_most((last_label, last), (f"{LIMIT_FRACTION:g}*{first_label}", LIMIT_FRACTION * first))


def distinct_indices(check_id: str, scalars: Dict[str, float]) -> None:
    if abs(scalars["q"] - scalars["r"]) <= EPS_Q:
        raise ParameterOutOfDomain(check_id, "r", scalars["r"], "r != q")
