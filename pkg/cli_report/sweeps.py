"""Tables of chain terms along a one-parameter sweep, for plotting."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from config import DEFAULT_TOL
from deformed_math import KernelSpec
from errors import BadParameter, DomainError, ParameterOutOfDomain, UnknownCheck
from inequality_suite import CHECK_REGISTRY, CheckInstance, CheckResult, families, resolve

logger = logging.getLogger(__name__)


def parse_range(text: str, cast=float) -> Tuple:
    """Parse "lo..hi"; a single number gives the degenerate range (v, v)."""
    parts = text.split("..")
    if len(parts) == 1:
        value = cast(parts[0])
        return value, value
    if len(parts) != 2:
        raise BadParameter("range", text, '"lo..hi"')
    return cast(parts[0]), cast(parts[1])


def is_range(text: str) -> bool:
    return ".." in text


@dataclass
class SweepTable:
    check_id: str
    variable: str
    header: List[str] = field(default_factory=list)
    rows: List[List[Optional[float]]] = field(default_factory=list)
    members: List[str] = field(default_factory=list)

    def to_document(self) -> Dict[str, object]:
        return {"check": self.check_id, "sweep": self.variable, "columns": self.header, "rows": self.rows, "members": self.members}

    def add_row(self, value: float, member: str, labels: Sequence[str], values: Sequence[float]):
        if not self.header:
            self.header = [self.variable]
        for label in labels:
            if label not in self.header:
                self.header.append(label)
                for row in self.rows:
                    row.append(None)
        cells: Dict[str, float] = dict(zip(labels, values))
        self.rows.append([value] + [cells.get(label) for label in self.header[1:]])
        self.members.append(member)


def _columns(result: CheckResult) -> Tuple[List[str], List[float]]:
    labels: List[str] = []
    values: List[float] = []
    for index, chain in enumerate(result.chains):
        prefix = "" if index == 0 else f"chain{index + 1}:"
        for label, value in zip(chain.labels, chain.values):
            label = prefix + label
            if label in labels:
                label = f"{label}#{labels.count(label) + 1}"
            labels.append(label)
            values.append(value)
    return labels, values


def sweep_parameters(check_name: str) -> List[str]:
    if check_name in CHECK_REGISTRY:
        members = [check_name]
    elif check_name in families():
        members = families()[check_name]
    else:
        raise UnknownCheck(check_name)
    names: List[str] = []
    for member in members:
        names.extend(spec.name for spec in CHECK_REGISTRY[member].params if spec.name not in names)
    return names


def sweep_check(
    check_name: str,
    variable: str,
    lo: float,
    hi: float,
    steps: int,
    fixed: Dict[str, float],
    distributions: Sequence[Sequence[float]] = (),
    kernel: Optional[KernelSpec] = None,
    tol: float = DEFAULT_TOL,
) -> SweepTable:
    """Evaluate ``check_name`` at ``steps`` evenly spaced values of ``variable``.

    A family name is resolved at every point, so a sweep crossing a case
    split (x = 1, q = 1) moves from one member to the next. Points no member
    accepts (x = 1 for the logarithm sandwiches, for instance) are skipped.
    Columns are keyed by term label; a cell is empty when the member at that
    point has no such term.
    """
    if variable not in sweep_parameters(check_name):
        raise BadParameter("sweep", variable, f"a scalar parameter of {check_name}")
    if steps < 1:
        raise BadParameter("steps", steps, "an integer >= 1")

    table = SweepTable(check_id=check_name, variable=variable)
    reason = "no points"
    for value in np.linspace(lo, hi, steps):
        value = float(value)
        inst = CheckInstance(
            check_id=check_name,
            distributions=[list(d) for d in distributions],
            scalars={**fixed, variable: value},
            kernel=kernel,
        )
        try:
            check = resolve(inst)
            result = check.evaluate(inst.with_id(check.check_id), tol)
        except (ParameterOutOfDomain, DomainError) as e:
            reason = str(e)
            logger.info(f"Skipping {variable}={value!r}: {e}")
            continue
        labels, values = _columns(result)
        table.add_row(value, check.check_id, labels, values)

    if not table.rows:
        raise BadParameter(variable, f"{lo}..{hi}", f"at least one point inside the domain of {check_name} (last rejection: {reason})")
    skipped = steps - len(table.rows)
    if skipped:
        logger.warning(f"{check_name}: {skipped} of {steps} sweep points lie outside every member's domain")
    return table
