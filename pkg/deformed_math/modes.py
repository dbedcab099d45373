"""Outer logarithms applied to a quasilinear mean: log, ln_q or ln_{r,q}."""

from dataclasses import dataclass
from typing import Dict, Literal, Optional

import numpy as np

from deformed_math.qlog import biparam_log, index_value, q_log
from errors import BadParameter

ModeKind = Literal["plain", "tsallis", "biparam"]


@dataclass(frozen=True)
class QuasilinearMode:
    kind: ModeKind = "plain"
    q: Optional[float] = None
    r: Optional[float] = None

    def __post_init__(self):
        if self.kind == "plain":
            return
        if self.kind not in ("tsallis", "biparam"):
            raise BadParameter("mode", self.kind, "one of plain, tsallis, biparam")
        if self.q is None:
            raise BadParameter("q", None, f"an index for mode {self.kind}")
        index_value(self.q)
        if self.kind == "biparam":
            if self.r is None:
                raise BadParameter("r", None, "an index for mode biparam")
            index_value(self.r)

    @classmethod
    def plain(cls) -> "QuasilinearMode":
        return cls("plain")

    @classmethod
    def tsallis(cls, q: float) -> "QuasilinearMode":
        return cls("tsallis", q=float(q))

    @classmethod
    def biparam(cls, r: float, q: float) -> "QuasilinearMode":
        return cls("biparam", q=float(q), r=float(r))

    def outer(self, x) -> float:
        if self.kind == "plain":
            return float(np.log(x))
        if self.kind == "tsallis":
            return float(q_log(x, self.q))
        return float(biparam_log(x, self.r, self.q))

    def describe(self) -> Dict[str, object]:
        out: Dict[str, object] = {"kind": self.kind}
        if self.q is not None:
            out["q"] = self.q
        if self.r is not None:
            out["r"] = self.r
        return out
