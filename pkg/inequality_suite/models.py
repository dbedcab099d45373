"""Pydantic models for check instances, campaign configuration and reports."""

import math
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError, ValidationInfo, field_validator, model_validator

from config import (
    DEFAULT_BAND,
    DEFAULT_FLOOR,
    DEFAULT_N_RANGE,
    DEFAULT_Q_RANGE,
    DEFAULT_R_RANGE,
    DEFAULT_SEED,
    DEFAULT_TOL,
    DEFAULT_TRIALS,
    DEFAULT_V_RANGE,
    DEFAULT_X_RANGE,
    EPS_Q,
)
from deformed_math import KernelSpec
from errors import BadConfig
from simplex import ProbabilityDistribution, Weight, validate


class CheckInstance(BaseModel):
    """One evaluation point of a check; enough to reproduce it exactly."""

    check_id: str
    distributions: List[List[Weight]] = Field(default_factory=list)
    scalars: Dict[str, float] = Field(default_factory=dict)
    kernel: Optional[KernelSpec] = None

    @field_validator("distributions")
    @classmethod
    def at_most_two(cls, value: List[List[Weight]]) -> List[List[Weight]]:
        if len(value) > 2:
            raise ValueError("a check takes at most two distributions")
        return value

    def parsed(self) -> List[ProbabilityDistribution]:
        return [validate(weights) for weights in self.distributions]

    def with_id(self, check_id: str) -> "CheckInstance":
        return self.model_copy(update={"check_id": check_id})


class CheckInfo(BaseModel):
    check_id: str
    family: str
    anchor: str
    description: str
    distributions: int
    parameters: Dict[str, str]
    kernels: List[str] = Field(default_factory=list)


def _ordered(value: Tuple[float, float], name: str) -> Tuple[float, float]:
    lo, hi = value
    if not (math.isfinite(lo) and math.isfinite(hi)) or lo > hi:
        raise ValueError(f"{name} must be a finite interval lo..hi with lo <= hi")
    return value


class CampaignConfig(BaseModel):
    checks: List[str]
    trials: int = DEFAULT_TRIALS
    seed: int = DEFAULT_SEED
    n_range: Tuple[int, int] = DEFAULT_N_RANGE
    q_range: Tuple[float, float] = DEFAULT_Q_RANGE
    r_range: Tuple[float, float] = DEFAULT_R_RANGE
    x_range: Tuple[float, float] = DEFAULT_X_RANGE
    v_range: Tuple[float, float] = DEFAULT_V_RANGE
    band: float = DEFAULT_BAND
    tol: float = DEFAULT_TOL
    floor: float = DEFAULT_FLOOR
    workers: int = 1

    @field_validator("trials", "workers")
    @classmethod
    def positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("must be a positive integer")
        return value

    @field_validator("seed")
    @classmethod
    def seed_fits_64_bits(cls, value: int) -> int:
        if not 0 <= value < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        return value

    @field_validator("n_range")
    @classmethod
    def n_at_least_two(cls, value: Tuple[int, int]) -> Tuple[int, int]:
        lo, hi = value
        if lo < 2 or lo > hi:
            raise ValueError("n_range must satisfy 2 <= n_min <= n_max")
        return value

    @field_validator("q_range", "r_range", "x_range")
    @classmethod
    def positive_interval(cls, value: Tuple[float, float], info: ValidationInfo) -> Tuple[float, float]:
        _ordered(value, info.field_name)
        if value[0] <= 0:
            raise ValueError(f"{info.field_name} must lie in (0, inf)")
        return value

    @field_validator("v_range")
    @classmethod
    def inside_unit_interval(cls, value: Tuple[float, float]) -> Tuple[float, float]:
        _ordered(value, "v_range")
        if value[0] <= 0 or value[1] >= 1:
            raise ValueError("v_range must lie in (0, 1)")
        return value

    @field_validator("band")
    @classmethod
    def band_covers_limit(cls, value: float) -> float:
        if not EPS_Q <= value < 1:
            raise ValueError(f"band must lie in [{EPS_Q}, 1)")
        return value

    @field_validator("tol")
    @classmethod
    def tol_positive(cls, value: float) -> float:
        if not value > 0:
            raise ValueError("tol must be > 0")
        return value

    @model_validator(mode="after")
    def floor_fits_largest_n(self) -> "CampaignConfig":
        if not 0 < self.floor < 1.0 / self.n_range[1]:
            raise ValueError(f"floor must lie in (0, 1/{self.n_range[1]})")
        return self

    @classmethod
    def build(cls, **fields) -> "CampaignConfig":
        try:
            return cls(**fields)
        except ValidationError as e:
            raise BadConfig(str(e)) from e


class CheckReport(BaseModel):
    id: str
    family: str
    trials: int
    passed: bool
    violations: int
    redraws: int
    skipped: int
    min_slack: Optional[float]
    worst_instance: Optional[CheckInstance]
    worst_chains: List[Dict[str, object]] = Field(default_factory=list)


class CampaignReport(BaseModel):
    seed: int
    config: CampaignConfig
    checks: List[CheckReport]
    passed: bool
    timing: Optional[Dict[str, float]] = None

    @property
    def violations(self) -> int:
        return sum(check.violations for check in self.checks)

    @property
    def skipped(self) -> int:
        return sum(check.skipped for check in self.checks)

    def to_document(self) -> Dict[str, object]:
        doc: Dict[str, object] = {
            "config": self.config.model_dump(mode="json"),
            "checks": [check.model_dump(mode="json", exclude_none=True) for check in self.checks],
            "pass": self.passed,
            "seed": self.seed,
        }
        if self.timing is not None:
            doc["timing"] = self.timing
        return doc
