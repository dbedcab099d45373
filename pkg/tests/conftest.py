import json
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from inequality_suite import BoundChain, Relation  # noqa: E402
from inequality_suite import registry  # noqa: E402
from errors import NumericalRangeError  # noqa: E402
from inequality_suite.checks import Q_ANY, Arguments, BaseCheck  # noqa: E402
from simplex import DivergencePair, uniform, validate  # noqa: E402


@pytest.fixture
def u2():
    return uniform(2)


@pytest.fixture
def skewed():
    return validate([0.9, 0.1])


@pytest.fixture
def skewed_pair():
    return DivergencePair(validate([0.9, 0.1]), uniform(2))


@pytest.fixture
def write_weights(tmp_path):
    def write(name, weights):
        path = tmp_path / name
        path.write_text(json.dumps({"weights": weights}))
        return str(path)

    return write


class AlwaysViolated(BaseCheck):
    family = "broken"
    anchor = "test only"
    description = "asserts 1 <= 0"
    distributions = 1

    def chains(self, args: Arguments):
        return [BoundChain.of(Relation.NON_DECREASING, [("one", 1.0), ("zero", 0.0)])]


@pytest.fixture
def broken_check(monkeypatch):
    """Registers a check that always fails, for the duration of one test."""
    check = AlwaysViolated("broken_always", (Q_ANY,))
    monkeypatch.setitem(registry.CHECK_REGISTRY, check.check_id, check)
    return check


class NeverEvaluates(BaseCheck):
    family = "overflowing"
    anchor = "test only"
    description = "every chain leaves double precision"

    def chains(self, args: Arguments):
        raise NumericalRangeError(f"q={args['q']} overflows")


@pytest.fixture
def overflowing_check(monkeypatch):
    """Registers a check whose trials never evaluate, for the duration of one test."""
    check = NeverEvaluates("overflow_always", (Q_ANY,))
    monkeypatch.setitem(registry.CHECK_REGISTRY, check.check_id, check)
    return check
