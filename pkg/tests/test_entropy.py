import math

import mpmath
import pytest
import scipy.stats

from deformed_math import LogKernel, PowerKernel, QLogKernel, QuasilinearMode
from entropy_kernels import (
    ENTROPY_REGISTRY,
    MeasureParams,
    arimoto_entropy,
    biparam_entropy,
    bose_einstein,
    dispatch_entropy,
    fermi_dirac,
    quasi_entropy,
    quasilinear_entropy,
    quasilinear_entropy_phi,
    renyi,
    shannon,
    tsallis,
    wada_suyari,
)
from errors import BadParameter, EqualIndices, LimitIndex
from simplex import sample, uniform, validate

mpmath.mp.dps = 50

SAMPLES = [sample(n, seed) for n, seed in [(2, 1), (3, 2), (7, 3), (16, 4)]]


class TestShannon:
    def test_uniform(self, u2):
        assert shannon(u2) == pytest.approx(math.log(2), rel=1e-15)
        for n in range(3, 9):
            assert shannon(uniform(n)) == pytest.approx(math.log(n), rel=1e-14)

    def test_near_degenerate(self):
        p = validate([0.999999999, 1e-9])
        expected = -sum(w * mpmath.log(w) for w in (mpmath.mpf(0.999999999), mpmath.mpf(1e-9)))
        assert shannon(p) == pytest.approx(float(expected), rel=1e-9)
        assert shannon(p) == pytest.approx(2.17e-8, rel=1e-2)

    @pytest.mark.parametrize("p", SAMPLES)
    def test_matches_scipy(self, p):
        assert shannon(p) == pytest.approx(scipy.stats.entropy(p.array), rel=1e-12)


class TestTsallis:
    def test_values(self, u2, skewed):
        assert tsallis(u2, 2.0) == pytest.approx(0.5, rel=1e-15)
        assert tsallis(skewed, 2.0) == pytest.approx(0.18, rel=1e-14)

    def test_limit_band(self, skewed):
        assert tsallis(skewed, 1.0 + 1e-12) == pytest.approx(shannon(skewed), rel=1e-15)

    @pytest.mark.parametrize("p", SAMPLES)
    def test_power_sum_form(self, p):
        q = 0.3
        expected = (sum(w**q for w in p.weights) - 1.0) / (1.0 - q)
        assert tsallis(p, q) == pytest.approx(expected, rel=1e-12)


class TestRenyi:
    @pytest.mark.parametrize("q", [0.2, 0.7, 2.0, 4.5])
    def test_uniform_invariance(self, q):
        assert renyi(uniform(5), q) == pytest.approx(math.log(5), rel=1e-13)

    def test_value(self, skewed):
        assert renyi(skewed, 2.0) == pytest.approx(-math.log(0.82), rel=1e-14)

    def test_limit_index(self, skewed):
        with pytest.raises(LimitIndex):
            renyi(skewed, 1.0)


class TestQuasiEntropy:
    def test_values(self, u2, skewed):
        assert quasi_entropy(u2, 2.0) == pytest.approx(0.5 * math.log(2), rel=1e-15)
        assert quasi_entropy(skewed, 1.0) == pytest.approx(shannon(skewed), rel=1e-15)
        expected = -sum(mpmath.sqrt(w) * mpmath.log(w) for w in (mpmath.mpf("0.9"), mpmath.mpf("0.1")))
        assert quasi_entropy(skewed, 0.5) == pytest.approx(float(expected), rel=1e-14)


class TestQuasilinear:
    @pytest.mark.parametrize("p", SAMPLES)
    def test_log_kernel_is_shannon(self, p):
        assert quasilinear_entropy(p, LogKernel()) == pytest.approx(shannon(p), rel=1e-12)
        assert quasilinear_entropy_phi(p, LogKernel()) == pytest.approx(shannon(p), rel=1e-12)

    @pytest.mark.parametrize("q", [0.3, 2.5])
    def test_power_kernel_forms(self, q):
        p = SAMPLES[2]
        assert quasilinear_entropy(p, PowerKernel.for_index(q)) == pytest.approx(renyi(p, q), rel=1e-12)
        assert quasilinear_entropy(p, PowerKernel.for_index(q), QuasilinearMode.tsallis(q)) == pytest.approx(tsallis(p, q), rel=1e-12)
        assert quasilinear_entropy(p, QLogKernel(q), QuasilinearMode.tsallis(q)) == pytest.approx(tsallis(p, q), rel=1e-12)

    def test_arimoto_form(self):
        p, r, q = SAMPLES[1], 2.0, 0.7
        mode = QuasilinearMode.biparam((2 * r - 1) / r, q)
        assert quasilinear_entropy(p, PowerKernel.for_index(r), mode) == pytest.approx(arimoto_entropy(p, r, q), rel=1e-12)


class TestWadaSuyari:
    def test_value(self, u2):
        expected = (2 * math.sqrt(0.5) - 0.5) / 1.5
        assert wada_suyari(u2, 2.0, 0.5) == pytest.approx(expected, rel=1e-14)

    def test_r_one_is_tsallis(self, skewed):
        assert wada_suyari(skewed, 1.0, 2.5) == pytest.approx(tsallis(skewed, 2.5), rel=1e-13)

    def test_tends_to_quasi_entropy(self, skewed):
        assert wada_suyari(skewed, 0.5 + 1e-13, 0.5) == pytest.approx(quasi_entropy(skewed, 0.5), abs=1e-6)

    def test_equal_indices(self, skewed):
        with pytest.raises(EqualIndices):
            wada_suyari(skewed, 2.0, 2.0)


class TestBiparametric:
    def test_limits(self, skewed):
        assert biparam_entropy(skewed, 1.0, 2.0) == pytest.approx(tsallis(skewed, 2.0), rel=1e-14)
        assert biparam_entropy(skewed, 0.4, 1.0) == pytest.approx(tsallis(skewed, 0.4), rel=1e-14)


class TestArimoto:
    def test_value(self, u2):
        assert arimoto_entropy(u2, 2.0, 1.0) == pytest.approx(2 - math.sqrt(2), rel=1e-14)

    def test_point_mass(self):
        assert arimoto_entropy(validate([1 - 1e-12, 1e-12]), 2.0, 1.0) == pytest.approx(0.0, abs=1e-9)

    def test_limit_index(self, u2):
        with pytest.raises(LimitIndex):
            arimoto_entropy(u2, 1.0, 2.0)


class TestOccupancy:
    def test_uniform_two(self, u2):
        assert fermi_dirac(u2, 1.0) == pytest.approx(2 * math.log(2), rel=1e-15)
        assert bose_einstein(u2, 1.0) == pytest.approx(math.log(2) + 3 * math.log(1.5), rel=1e-15)
        gap = bose_einstein(u2, 1.0) - fermi_dirac(u2, 1.0)
        assert gap == pytest.approx(3 * math.log(1.5) - math.log(2), abs=1e-12)

    @pytest.mark.parametrize("r", [0.1, 0.5, 2.0, 5.0])
    def test_fermi_below_bose(self, r):
        for p in SAMPLES:
            assert fermi_dirac(p, r) <= bose_einstein(p, r)


class TestRegistry:
    def test_names(self):
        assert set(ENTROPY_REGISTRY) == {
            "shannon", "tsallis", "renyi", "quasi-entropy", "quasilinear",
            "wada-suyari", "biparam", "arimoto", "fermi-dirac", "bose-einstein",
        }

    def test_dispatch(self, u2):
        assert dispatch_entropy("tsallis", u2, MeasureParams(q=2.0)) == pytest.approx(0.5)
        params = MeasureParams(kernel={"family": "qlog", "q": 2.0}, mode="tsallis", q=2.0)
        assert dispatch_entropy("quasilinear", u2, params) == pytest.approx(0.5)

    def test_missing_parameter(self, u2):
        with pytest.raises(BadParameter):
            dispatch_entropy("renyi", u2, MeasureParams())

    def test_unknown_measure(self, u2):
        with pytest.raises(BadParameter):
            dispatch_entropy("nosuch", u2, MeasureParams())
