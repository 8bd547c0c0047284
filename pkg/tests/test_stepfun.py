import math
from fractions import Fraction

import pytest

from shiftdim import (
    StepFunction,
    err_vp,
    interleaving_distance,
    locus_nonadditivity,
    lp_distance,
    stabilize,
    sum_curves,
)


class TestStepFunction:
    def test_canonical_merge(self):
        f = StepFunction([0, 1, 2, 3], [5, 5, 2, 2])
        assert f.breakpoints == (0, 2) and f.values == (5, 2)

    def test_monotonicity_enforced(self):
        with pytest.raises(ValueError):
            StepFunction([0, 1], [1, 2])

    def test_evaluation(self):
        f = StepFunction([0, Fraction(3, 2), 2], [7, 3, 0])
        assert f(0) == 7 and f(1) == 7
        assert f(Fraction(3, 2)) == 3  # right continuous
        assert f(Fraction(199, 100)) == 3
        assert f(2) == 0 and f(100) == 0

    def test_infinite_values(self):
        f = StepFunction([0, 1], [math.inf, 2])
        assert f(0) == math.inf and f(1) == 2


class TestStabilize:
    def test_two_point_space(self):
        d = [[0, 1], [1, 0]]
        f = [3, 5]
        assert stabilize(d, f, 1) == StepFunction([0, 1], [5, 3])
        assert stabilize(d, f, 0) == StepFunction.constant(3)

    def test_singleton(self):
        assert stabilize([[0]], [4], 0) == StepFunction.constant(4)

    def test_asymmetric_rejected(self):
        with pytest.raises(ValueError):
            stabilize([[0, 1], [2, 0]], [1, 1], 0)

    def test_infinite_distances_never_enter(self):
        d = [[0, math.inf], [math.inf, 0]]
        assert stabilize(d, [3, 0], 0) == StepFunction.constant(3)


class TestInterleaving:
    def test_equal(self):
        f = StepFunction([0, 1], [5, 0])
        assert interleaving_distance(f, f) == 0.0

    def test_horizontal_shift(self):
        f = StepFunction([0, 1], [5, 0])
        g = StepFunction([0, 2], [5, 0])
        assert interleaving_distance(f, g) == 1.0

    def test_infinite(self):
        f = StepFunction.constant(math.inf)
        g = StepFunction([0, 3], [7, 0])
        assert interleaving_distance(f, g) == math.inf


class TestSumAndLp:
    def test_sum(self):
        f = StepFunction([0, 1], [2, 0])
        g = StepFunction([0, Fraction(1, 2)], [3, 1])
        assert sum_curves([f, g]) == StepFunction([0, Fraction(1, 2), 1], [5, 3, 1])

    def test_lp_examples(self):
        f = StepFunction([0, 1], [1, 0])
        assert lp_distance(f, f, 3) == 0.0
        g = StepFunction([0, Fraction(3, 2)], [1, 0])
        assert lp_distance(f, g, 1) == 0.5

    def test_lp_infinite_support(self):
        f = StepFunction.constant(1)
        g = StepFunction.constant(0)
        assert lp_distance(f, g, 2) == math.inf

    def test_p_below_one_rejected(self):
        f = StepFunction.constant(0)
        with pytest.raises(ValueError):
            lp_distance(f, f, 0.5)


class TestNonAdditivity:
    def _revisited_pair(self):
        m1 = StepFunction([0, 1, 2], [5, 2, 0])
        m2 = StepFunction([0, 1, 2], [2, 1, 0])
        total = StepFunction([0, 1, Fraction(3, 2), 2], [7, 3, 2, 0])
        return [m1, m2], total

    def test_locus_revisited(self):
        summands, total = self._revisited_pair()
        assert locus_nonadditivity(summands, total) == [(Fraction(3, 2), Fraction(2))]

    def test_err_revisited(self):
        summands, total = self._revisited_pair()
        assert err_vp(summands, total, 1) == 0.5
        assert abs(err_vp(summands, total, 3) - 0.5 ** (1 / 3)) < 1e-12

    def test_additive_family_empty_locus(self):
        f = StepFunction([0, 2], [1, 0])
        assert locus_nonadditivity([f, f], sum_curves([f, f])) == []
        assert err_vp([f, f], sum_curves([f, f]), 2) == 0.0

    def test_single_summand(self):
        f = StepFunction([0, 2], [3, 0])
        assert err_vp([f], f, 1) == 0.0

    def test_subadditivity_violation_rejected(self):
        f = StepFunction([0, 1], [1, 0])
        too_big = StepFunction([0, 1], [5, 0])
        with pytest.raises(ValueError):
            err_vp([f], too_big, 1)

    def test_disconnected_locus(self):
        a = StepFunction([0, 1, 2, 3, 4], [4, 3, 2, 1, 0])
        b = StepFunction([0, 1, 2, 3, 4], [4, 2, 2, 0, 0])
        loc = locus_nonadditivity([a], b)
        assert loc == [(Fraction(1), Fraction(2)), (Fraction(3), Fraction(4))]
