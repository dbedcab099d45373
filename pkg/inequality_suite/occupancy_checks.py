"""Fermi-Dirac and Bose-Einstein entropy comparisons."""

import math
from typing import List

from entropy_kernels import bose_einstein, fermi_dirac, shannon
from inequality_suite.chain import BoundChain, Relation
from inequality_suite.checks import Arguments, BaseCheck, ParamSpec, at_most, identity
from simplex import be_complement, fd_complement

# r = 1 is admissible: it is the undeformed case.
R_ALL = ParamSpec("r", source="r", avoid_one=False)


def _xlogx(x: float) -> float:
    return x * math.log(x) if x > 0 else 0.0


class FermiBoseOrdering(BaseCheck):
    family = "thm_5_1"
    anchor = "l_1^FD(p) <= l_1^BE(p)"
    description = "Fermi-Dirac entropy is at most the Bose-Einstein entropy"
    distributions = 1

    def chains(self, args: Arguments) -> List[BoundChain]:
        return [at_most(("l_1^FD", fermi_dirac(args.p, 1.0)), ("l_1^BE", bose_einstein(args.p, 1.0)))]


class FermiBoseAlternative(BaseCheck):
    family = "thm_5_1_alt"
    anchor = "l_1^FD - l_1^BE <= log(n^{2n} / ((n-1)^{n-1}(n+1)^{n+1}))"
    description = "l_1^FD - l_1^BE <= log(n^{2n} / ((n-1)^{n-1} (n+1)^{n+1})) <= 0"
    distributions = 1

    def chains(self, args: Arguments) -> List[BoundChain]:
        p = args.p
        n = p.n
        bound = 2.0 * _xlogx(n) - _xlogx(n - 1) - _xlogx(n + 1)
        gap = fermi_dirac(p, 1.0) - bose_einstein(p, 1.0)
        return [BoundChain.of(Relation.NON_DECREASING, [("l_1^FD-l_1^BE", gap), ("log n^2n/((n-1)^(n-1)(n+1)^(n+1))", bound), ("0", 0.0)])]


class TsallisFermiBoseOrdering(BaseCheck):
    family = "thm_5_2"
    anchor = "l_r^FD(p) <= l_r^BE(p)"
    description = "Fermi-Dirac-Tsallis entropy is at most the Bose-Einstein-Tsallis entropy"
    distributions = 1

    def chains(self, args: Arguments) -> List[BoundChain]:
        r = args["r"]
        return [at_most(("l_r^FD", fermi_dirac(args.p, r)), ("l_r^BE", bose_einstein(args.p, r)))]


class OccupancyDecomposition(BaseCheck):
    family = "id_fd_decomp"
    anchor = "l_1^FD, l_1^BE via p' and p''"
    description = (
        "l_1^FD = H(p) + (n-1)H(p') - (n-1)log(n-1) and l_1^BE = H(p) - (n+1)H(p'') + (n+1)log(n+1) "
        "with p'_j = (1-p_j)/(n-1), p''_j = (1+p_j)/(n+1)"
    )
    distributions = 1

    def chains(self, args: Arguments) -> List[BoundChain]:
        p = args.p
        n = p.n
        h = shannon(p)
        fd = h + (n - 1) * shannon(fd_complement(p)) - _xlogx(n - 1)
        be = h - (n + 1) * shannon(be_complement(p)) + _xlogx(n + 1)
        return [
            identity(("l_1^FD", fermi_dirac(p, 1.0)), ("H+(n-1)H(p')-(n-1)log(n-1)", fd)),
            identity(("l_1^BE", bose_einstein(p, 1.0)), ("H-(n+1)H(p'')+(n+1)log(n+1)", be)),
        ]


CHECKS = [
    FermiBoseOrdering("thm_5_1"),
    FermiBoseAlternative("thm_5_1_alt"),
    TsallisFermiBoseOrdering("thm_5_2", (R_ALL,)),
    OccupancyDecomposition("id_fd_decomp"),
]
