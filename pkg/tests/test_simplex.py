import numpy as np
import pytest
from numpy.testing import assert_allclose

from errors import BadFloor, BadParameter, DegenerateWeight, LengthMismatch, NonNumericWeight, NonPositiveWeight, NotNormalized, TooShort
from simplex import DivergencePair, be_complement, fd_complement, mixture, sample, uniform, validate


class TestValidate:
    def test_accepts_simplex_point(self):
        p = validate([0.5, 0.5])
        assert p.n == 2
        assert p.to_list() == [0.5, 0.5]

    def test_not_normalized(self):
        with pytest.raises(NotNormalized) as exc:
            validate([0.5, 0.6])
        assert exc.value.total == pytest.approx(1.1)

    def test_zero_weight(self):
        with pytest.raises(NonPositiveWeight) as exc:
            validate([1.0, 0.0])
        assert exc.value.index == 1

    def test_nan_weight(self):
        with pytest.raises(NonPositiveWeight):
            validate([float("nan"), 1.0])

    def test_too_short(self):
        with pytest.raises(TooShort):
            validate([1.0])

    def test_sum_tolerance_scales_with_n(self):
        validate([0.1] * 10)

    @pytest.mark.parametrize("raw, index", [(["0.5", "0.5"], 0), ([0.5, "0.5"], 1), ([True, False], 0), ([0.5, None], 1)])
    def test_rejects_non_numeric(self, raw, index):
        with pytest.raises(NonNumericWeight) as exc:
            validate(raw)
        assert exc.value.index == index

    def test_accepts_numpy_and_integer_weights(self):
        assert validate(np.array([0.25, 0.75])).to_list() == [0.25, 0.75]
        with pytest.raises(NonPositiveWeight):
            validate([1, 0])


class TestUniform:
    def test_values(self):
        assert uniform(2).to_list() == [0.5, 0.5]
        assert uniform(4).to_list() == [0.25] * 4

    def test_too_short(self):
        with pytest.raises(TooShort):
            uniform(1)


class TestSample:
    def test_deterministic(self):
        assert sample(3, 7, 1e-6) == sample(3, 7, 1e-6)

    def test_different_seeds_differ(self):
        assert sample(5, 1) != sample(5, 2)

    @pytest.mark.parametrize("seed", range(20))
    def test_respects_floor(self, seed):
        p = sample(16, seed, 0.05)
        assert min(p.weights) >= 0.05
        assert sum(p.weights) == pytest.approx(1.0, abs=1e-12)

    def test_bad_floor(self):
        with pytest.raises(BadFloor):
            sample(2, 0, 0.6)


class TestDerived:
    def test_fd_complement(self):
        assert fd_complement(uniform(2)).to_list() == pytest.approx([0.5, 0.5])
        assert_allclose(fd_complement(validate([0.7, 0.2, 0.1])).array, [0.15, 0.40, 0.45])

    def test_fd_complement_needs_mass_below_one(self):
        p = validate([1.0 - 1e-13, 1e-13])
        assert fd_complement(p).n == 2
        with pytest.raises(DegenerateWeight):
            fd_complement(validate([1.0, 1e-17]))

    def test_be_complement(self):
        assert be_complement(uniform(2)).to_list() == pytest.approx([0.5, 0.5])
        assert_allclose(be_complement(validate([0.7, 0.2, 0.1])).array, [0.425, 0.300, 0.275])

    def test_mixture(self):
        pair = DivergencePair(validate([0.8, 0.2]), validate([0.2, 0.8]))
        assert mixture(pair, 1.0) is pair.r
        assert_allclose(mixture(pair, 0.5).array, [0.5, 0.5])
        assert_allclose(mixture(DivergencePair(validate([0.8, 0.2]), validate([0.4, 0.6])), 0.25).array, [0.7, 0.3])

    def test_mixture_weight_domain(self):
        pair = DivergencePair(uniform(2), uniform(2))
        for v in (0.0, 1.5, -0.1):
            with pytest.raises(BadParameter):
                mixture(pair, v)

    def test_pair_lengths(self):
        with pytest.raises(LengthMismatch):
            DivergencePair(uniform(2), uniform(3))

    def test_swapped(self):
        pair = DivergencePair(validate([0.9, 0.1]), uniform(2))
        assert pair.swapped().p == pair.r
        assert np.array_equal(pair.swapped().r.array, pair.p.array)
