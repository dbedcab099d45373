"""Catalog of checks keyed by identifier, with family resolution."""

from typing import Dict, List, Optional, Sequence

from config import DEFAULT_TOL
from errors import ParameterOutOfDomain, UnknownCheck
from inequality_suite import divergence_checks, entropy_checks, mixture_checks, occupancy_checks, scalar_checks
from inequality_suite.checks import BaseCheck, CheckResult
from inequality_suite.models import CheckInfo, CheckInstance

CHECK_REGISTRY: Dict[str, BaseCheck] = {
    check.check_id: check
    for module in (scalar_checks, entropy_checks, divergence_checks, mixture_checks, occupancy_checks)
    for check in module.CHECKS
}


def families() -> Dict[str, List[str]]:
    """Family name -> member check ids, in catalog order."""
    grouped: Dict[str, List[str]] = {}
    for check_id, check in CHECK_REGISTRY.items():
        grouped.setdefault(check.family, []).append(check_id)
    return grouped


def resolve_ids(names: Sequence[str]) -> List[str]:
    """Expand "all" and family names into check ids, dropping duplicates."""
    grouped = families()
    selected: List[str] = []
    for name in names:
        if name == "all":
            members = list(CHECK_REGISTRY)
        elif name in CHECK_REGISTRY:
            members = [name]
        elif name in grouped:
            members = grouped[name]
        else:
            raise UnknownCheck(name)
        selected.extend(member for member in members if member not in selected)
    return selected


def get_check(check_id: str) -> BaseCheck:
    check = CHECK_REGISTRY.get(check_id)
    if check is None:
        raise UnknownCheck(check_id)
    return check


def resolve(inst: CheckInstance) -> BaseCheck:
    """The check an instance addresses.

    A family name resolves to its unique member whose domain holds the
    instance, so "thm_2_3" with q = 0.5 runs thm_2_3_sub.
    """
    if inst.check_id in CHECK_REGISTRY:
        return CHECK_REGISTRY[inst.check_id]
    members = families().get(inst.check_id)
    if members is None:
        raise UnknownCheck(inst.check_id)
    accepting = [CHECK_REGISTRY[member] for member in members if CHECK_REGISTRY[member].accepts(inst)]
    if len(accepting) != 1:
        q = inst.scalars.get("q")
        raise ParameterOutOfDomain(
            inst.check_id,
            "q" if q is not None else "instance",
            q if q is not None else inst.scalars,
            "the domain of exactly one of " + ", ".join(members),
        )
    return accepting[0]


def run_check(inst: CheckInstance, tol: float = DEFAULT_TOL) -> CheckResult:
    check = resolve(inst)
    return check.evaluate(inst.with_id(check.check_id), tol)


def list_checks(names: Optional[Sequence[str]] = None) -> List[CheckInfo]:
    ids = resolve_ids(names) if names else list(CHECK_REGISTRY)
    return [CHECK_REGISTRY[check_id].info() for check_id in ids]
