"""Exception hierarchy shared by every package."""

from typing import Optional


class QEntropyError(Exception):
    """Root of every error raised by this project."""


class DomainError(QEntropyError, ValueError):
    """An argument lies outside the domain of a function."""


class NonPositiveArgument(DomainError):
    def __init__(self, value: float):
        super().__init__(f"argument must be > 0, got {value!r}")
        self.value = value


class UndefinedQExp(DomainError):
    def __init__(self, x: float, q: float):
        super().__init__(f"exp_q({x!r}) is undefined for q={q!r}: 1 + (1 - q) x <= 0")
        self.x = x
        self.q = q


class DegenerateArgument(DomainError):
    def __init__(self, message: str = "x = 1 is degenerate (0/0)"):
        super().__init__(message)


class LimitIndex(DomainError):
    def __init__(self, name: str, value: float):
        super().__init__(f"{name}={value!r} is in the limit band around 1; use the undeformed measure")
        self.name = name
        self.value = value


class EqualIndices(DomainError):
    def __init__(self, q: float, r: float):
        super().__init__(f"indices must differ, got q={q!r} and r={r!r}")
        self.q = q
        self.r = r


class BadAlpha(DomainError):
    def __init__(self, alpha: float):
        super().__init__(f"alpha must differ from +1 and -1, got {alpha!r}")
        self.alpha = alpha


class BadParameter(DomainError):
    def __init__(self, name: str, value: object, expected: str):
        super().__init__(f"{name}={value!r}: expected {expected}")
        self.name = name
        self.value = value


class LengthMismatch(DomainError):
    def __init__(self, left: int, right: int):
        super().__init__(f"length mismatch: {left} != {right}")
        self.left = left
        self.right = right


class NumericalRangeError(DomainError):
    """A chain term overflowed or became NaN in double precision."""


class DistributionError(DomainError):
    pass


class NonPositiveWeight(DistributionError):
    def __init__(self, index: int, value: float):
        super().__init__(f"weight at index {index} must be > 0, got {value!r}")
        self.index = index
        self.value = value


class NonNumericWeight(DistributionError):
    def __init__(self, index: object, value: object):
        super().__init__(f"weight at index {index} must be a number, got {value!r}")
        self.index = index
        self.value = value


class NotNormalized(DistributionError):
    def __init__(self, total: float):
        super().__init__(f"weights must sum to 1, got {total!r}")
        self.total = total


class TooShort(DistributionError):
    def __init__(self, n: int):
        super().__init__(f"a distribution needs at least 2 weights, got {n}")
        self.n = n


class BadFloor(DistributionError):
    def __init__(self, floor: float, n: int):
        super().__init__(f"floor must lie in (0, 1/{n}), got {floor!r}")
        self.floor = floor
        self.n = n


class DegenerateWeight(DistributionError):
    def __init__(self, index: int):
        super().__init__(f"weight at index {index} equals 1; complement is undefined")
        self.index = index


class SuiteError(QEntropyError):
    pass


class UnknownCheck(SuiteError, KeyError):
    def __init__(self, check_id: str):
        super().__init__(f"unknown check: {check_id!r}")
        self.check_id = check_id

    def __str__(self) -> str:
        return self.args[0]


class ParameterOutOfDomain(SuiteError):
    def __init__(self, check_id: str, name: str, value: object, domain: Optional[str] = None):
        detail = f" (expected {domain})" if domain else ""
        super().__init__(f"{check_id}: parameter {name}={value!r} out of domain{detail}")
        self.check_id = check_id
        self.name = name
        self.value = value


class EmptyCheckSet(SuiteError):
    def __init__(self):
        super().__init__("no checks selected")


class BadConfig(SuiteError):
    pass
