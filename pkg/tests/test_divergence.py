import math

import mpmath
import pytest
import scipy.spatial.distance
import scipy.stats

from deformed_math import LogKernel, PowerKernel, QLogKernel, QuasilinearMode
from divergence_kernels import (
    DIVERGENCE_REGISTRY,
    alpha_div,
    arimoto_div,
    biparam_div,
    dispatch_divergence,
    hat_div,
    jeffreys,
    jensen_shannon,
    kl,
    lin,
    quasi_div,
    quasilinear_div,
    renyi_div,
    tsallis_div,
)
from entropy_kernels import MeasureParams
from errors import BadAlpha, BadParameter, EqualIndices, LimitIndex
from simplex import DivergencePair, sample

mpmath.mp.dps = 50

PAIRS = [DivergencePair(sample(n, seed), sample(n, seed + 100)) for n, seed in [(2, 1), (4, 2), (9, 3)]]


def same(pair: DivergencePair) -> DivergencePair:
    return DivergencePair(pair.p, pair.p)


class TestClassical:
    def test_kl_value(self, skewed_pair):
        expected = 0.9 * math.log(1.8) + 0.1 * math.log(0.2)
        assert kl(skewed_pair) == pytest.approx(expected, rel=1e-14)
        assert kl(same(skewed_pair)) == 0.0

    @pytest.mark.parametrize("pair", PAIRS)
    def test_kl_matches_scipy(self, pair):
        assert kl(pair) == pytest.approx(scipy.stats.entropy(pair.p.array, pair.r.array), rel=1e-12)

    def test_tsallis_value(self, skewed_pair):
        assert tsallis_div(skewed_pair, 2.0) == pytest.approx(0.64, rel=1e-14)
        assert tsallis_div(same(skewed_pair), 0.4) == 0.0
        assert tsallis_div(skewed_pair, 1.0) == pytest.approx(kl(skewed_pair), rel=1e-13)

    def test_renyi_value(self, skewed_pair):
        assert renyi_div(skewed_pair, 2.0) == pytest.approx(math.log(1.64), rel=1e-14)
        assert renyi_div(same(skewed_pair), 3.0) == 0.0
        with pytest.raises(LimitIndex):
            renyi_div(skewed_pair, 1.0)

    def test_alpha_value(self, skewed_pair):
        expected = 4 * (1 - math.sqrt(0.45) - math.sqrt(0.05))
        assert alpha_div(skewed_pair, 0.0) == pytest.approx(expected, rel=1e-14)
        assert alpha_div(same(skewed_pair), 0.3) == 0.0

    @pytest.mark.parametrize("alpha", [1.0, -1.0])
    def test_alpha_poles(self, skewed_pair, alpha):
        with pytest.raises(BadAlpha):
            alpha_div(skewed_pair, alpha)


class TestQuasilinear:
    @pytest.mark.parametrize("pair", PAIRS)
    def test_kernel_forms(self, pair):
        q = 0.6
        assert quasilinear_div(pair, LogKernel()) == pytest.approx(kl(pair), rel=1e-10)
        assert quasilinear_div(pair, PowerKernel.for_index(q)) == pytest.approx(renyi_div(pair, q), rel=1e-10)
        tsallis = tsallis_div(pair, q)
        assert quasilinear_div(pair, PowerKernel.for_index(q), QuasilinearMode.tsallis(q)) == pytest.approx(tsallis, rel=1e-10)
        assert quasilinear_div(pair, QLogKernel(q), QuasilinearMode.tsallis(q)) == pytest.approx(tsallis, rel=1e-10)


class TestBiparametric:
    def test_hat_reduces_to_tsallis(self, skewed_pair):
        assert hat_div(skewed_pair, 2.0, 1.0) == pytest.approx(tsallis_div(skewed_pair, 2.0), rel=1e-14)
        assert hat_div(same(skewed_pair), 2.0, 0.5) == 0.0

    @pytest.mark.parametrize("pair", PAIRS)
    def test_hat_convex_combination(self, pair):
        q, r = 2.0, 0.5
        expected = ((r - 1) * tsallis_div(pair, r) - (q - 1) * tsallis_div(pair, q)) / (r - q)
        assert hat_div(pair, q, r) == pytest.approx(expected, rel=1e-10, abs=1e-14)

    def test_hat_equal_indices(self, skewed_pair):
        with pytest.raises(EqualIndices):
            hat_div(skewed_pair, 2.0, 2.0)

    def test_quasi_value(self, skewed_pair):
        expected = mpmath.mpf("1.62") * mpmath.log(mpmath.mpf("1.8")) - mpmath.mpf("0.02") * mpmath.log(5)
        assert quasi_div(skewed_pair, 2.0) == pytest.approx(float(expected), rel=1e-13)
        assert quasi_div(skewed_pair, 1.0) == pytest.approx(kl(skewed_pair), rel=1e-14)
        assert quasi_div(same(skewed_pair), 3.0) == 0.0

    def test_biparam_limits(self, skewed_pair):
        assert biparam_div(skewed_pair, 1.0, 2.0) == pytest.approx(tsallis_div(skewed_pair, 2.0), rel=1e-14)
        assert biparam_div(same(skewed_pair), 2.0, 0.5) == 0.0

    def test_arimoto_value(self, skewed_pair):
        assert arimoto_div(skewed_pair, 2.0, 1.0) == pytest.approx(2 * (math.sqrt(1.64) - 1), rel=1e-14)
        assert arimoto_div(same(skewed_pair), 2.0, 0.5) == 0.0


class TestMixtureDivergences:
    @pytest.mark.parametrize("pair", PAIRS)
    def test_jensen_shannon_matches_scipy(self, pair):
        expected = scipy.spatial.distance.jensenshannon(pair.p.array, pair.r.array) ** 2
        assert jensen_shannon(pair) == pytest.approx(expected, rel=1e-10)

    @pytest.mark.parametrize("pair", PAIRS)
    def test_jeffreys_is_symmetric_kl(self, pair):
        assert jeffreys(pair) == pytest.approx(kl(pair) + kl(pair.swapped()), rel=1e-15)
        assert jeffreys(pair) == pytest.approx(jeffreys(pair.swapped()), rel=1e-14)

    def test_lin_value(self, skewed_pair):
        expected = 0.9 * math.log(1.8 / 1.4) + 0.1 * math.log(0.2 / 0.6)
        assert lin(skewed_pair) == pytest.approx(expected, rel=1e-13)
        assert lin(same(skewed_pair)) == pytest.approx(0.0, abs=1e-16)


class TestRegistry:
    def test_names(self):
        assert set(DIVERGENCE_REGISTRY) == {
            "kl", "tsallis", "renyi", "alpha", "quasilinear", "hat", "quasi",
            "biparam", "arimoto", "jeffreys", "jensen-shannon", "lin",
        }

    def test_dispatch(self, skewed_pair):
        assert dispatch_divergence("tsallis", skewed_pair, MeasureParams(q=2.0)) == pytest.approx(0.64)
        assert dispatch_divergence("hat", skewed_pair, MeasureParams(q=2.0, r=1.0)) == pytest.approx(0.64)

    def test_missing_parameter(self, skewed_pair):
        with pytest.raises(BadParameter):
            dispatch_divergence("alpha", skewed_pair, MeasureParams())
