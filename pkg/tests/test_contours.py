import random

import pytest

from shiftdim import (
    INFINITY,
    ComponentwiseShiftContour,
    CurveContour,
    DistanceTypeContour,
    MultivariateShiftContour,
    StandardContour,
    TruncatedContour,
    check_contour_axioms,
    const_density,
    exp_decay_density,
    gauss_density,
)


def box_samples(n, r=2, xmax=2.0, emax=0.8, seed=0):
    rng = random.Random(seed)
    for _ in range(n):
        yield (
            tuple(rng.uniform(0, xmax) for _ in range(r)),
            rng.uniform(0, emax),
            rng.uniform(0, emax),
        )


class TestStandardAndTruncated:
    def test_standard_examples(self):
        c = StandardContour([2, 1])
        assert c.evaluate((0, 4), 1).value == (2.0, 5.0)
        assert c.evaluate((3, 7), 0).value == (3.0, 7.0)
        assert StandardContour([4, 4]).evaluate((0, 8), 1).value == (4.0, 12.0)

    def test_exactness(self):
        assert StandardContour([2, 1]).evaluate((0, 4), 1).accuracy == 0.0

    def test_truncated_examples(self):
        c = TruncatedContour(StandardContour([1, 1]), [3, 3])
        assert c.evaluate((0, 0), 2).value == (2.0, 2.0)
        assert c.evaluate((0, 0), 3).value is INFINITY
        assert c.evaluate((0, 0), 2.5).value == (2.5, 2.5)

    def test_infinity_input_absorbs(self):
        c = StandardContour([1, 1])
        assert c.evaluate(INFINITY, 2).value is INFINITY

    def test_negative_eps_rejected(self):
        with pytest.raises(ValueError):
            StandardContour([1, 1]).evaluate((0, 0), -1)


class TestCurveContour:
    def test_ray(self):
        ray = CurveContour([(0, (0, 0)), (50, (50, 50))], [1])
        assert ray.evaluate((1, 3), 2).value == (3.0, 5.0)
        assert ray.evaluate((1, 3), 0).value == (1.0, 3.0)

    def test_two_segment_polyline(self):
        poly = CurveContour([(0, (0, 0)), (1, (1, 0)), (2, (1, 1))], [1])
        assert poly.evaluate((0.5, 0), 1).value == (1.0, 0.5)

    def test_past_the_end_is_infinite(self):
        poly = CurveContour([(0, (0, 0)), (1, (1, 1))], [1])
        assert poly.evaluate((0.5, 0.5), 2).value is INFINITY

    def test_ambiguous_translate_rejected(self):
        poly = CurveContour([(0, (0, 0)), (1, (1, 0)), (2, (1, 1))], [1])
        with pytest.raises(ValueError, match="translate"):
            poly.evaluate((1.0, 0.25), 0.1)

    def test_unreachable_rejected(self):
        poly = CurveContour([(0, (0, 0)), (1, (1, 1))], [1])
        with pytest.raises(ValueError, match="reachable"):
            poly.evaluate((5.0, 0.0), 0.1)


class TestDistanceType:
    def test_analytic_strip(self):
        c = DistanceTypeContour([1, 0], exp_decay_density([0, 1]),
                                quad_depth=9, search_cap=32.0)
        res = c.evaluate((0.0, 0.0), 1.0)
        assert abs(res.value[0] - 1.0) <= max(res.accuracy, 1e-3)
        assert res.value[1] == 0.0

    def test_eps_zero_is_identity(self):
        c = DistanceTypeContour([1, 1], exp_decay_density([1, 1]))
        assert c.evaluate((0.3, 0.4), 0.0).value == (0.3, 0.4)

    def test_infinite_mass_detected(self):
        c = DistanceTypeContour([1, 0], const_density(1.0),
                                quad_depth=8, search_cap=16.0)
        res = c.evaluate((0.0, 0.0), 1.0)
        assert res.value is INFINITY

    def test_unreachable_eps_is_infinite(self):
        c = DistanceTypeContour([1, 1], gauss_density(0.5), search_cap=8.0)
        assert c.evaluate((0.0, 0.0), 1e6).value is INFINITY

    def test_quadrature_convergence(self):
        # doubling the depth moves the answer by less than reported accuracy
        for depth in (7, 8, 9):
            coarse = DistanceTypeContour([1, 0], exp_decay_density([0, 1]),
                                         quad_depth=depth, search_cap=32.0)
            fine = DistanceTypeContour([1, 0], exp_decay_density([0, 1]),
                                       quad_depth=depth + 1, search_cap=32.0)
            a = coarse.evaluate((0.0, 0.0), 1.0)
            b = fine.evaluate((0.0, 0.0), 1.0)
            assert abs(a.value[0] - b.value[0]) < a.accuracy


class TestComponentwise:
    def test_constant_density_matches_standard(self):
        cw = ComponentwiseShiftContour(
            [const_density(1.0)] * 2, [lambda e: e, lambda e: e],
            quad_depth=10, search_cap=16.0,
        )
        std = StandardContour([1, 1])
        for x, eps, _tau in box_samples(40, xmax=4.0, emax=2.0, seed=3):
            a = cw.evaluate(x, eps).value
            b = std.evaluate(x, eps).value
            assert max(abs(p - q) for p, q in zip(a, b)) < 1e-9

    def test_quadratic_cumulative(self):
        import numpy as np

        def linear(points):
            return 2.0 * points[..., 0]

        cw = ComponentwiseShiftContour([linear], [lambda e: e],
                                       quad_depth=10, search_cap=8.0)
        res = cw.evaluate((4.0,), 1.0)
        assert abs(res.value[0] - 9.0) < 1e-6

    def test_unreachable_mass_is_infinite(self):
        cw = ComponentwiseShiftContour([gauss_density(0.4)], [lambda e: e],
                                       search_cap=8.0)
        assert cw.evaluate((100.0,), 0.1).value is INFINITY

    def test_non_superadditive_shift_rejected(self):
        with pytest.raises(ValueError, match="super-additive"):
            ComponentwiseShiftContour([const_density(1.0)], [lambda e: e ** 0.5])


class TestMultivariateShift:
    def test_closed_form(self):
        mv = MultivariateShiftContour([const_density(1.0)] * 2, [1, 1],
                                      grid0=8, refine_levels=4, search_cap=16.0)
        for eps in (0.25, 0.5, 1.0, 1.5, 2.0):
            val = mv.evaluate((0.0, 0.0), eps).value
            assert max(abs(c - eps ** 2) for c in val) < 1e-6

    def test_empty_superlevel_is_infinite(self):
        mv = MultivariateShiftContour([gauss_density(0.3)] * 2, [1, 1],
                                      search_cap=4.0)
        assert mv.evaluate((1e9, 0.0), 1.0).value is INFINITY

    def test_b_refinement_monotone_and_brackets(self):
        mv = MultivariateShiftContour([const_density(1.0)] * 2, [1, 1],
                                      grid0=8, refine_levels=4, search_cap=16.0)
        x = (1.0, 2.0)
        ests = mv.b_estimates(x)
        levels, final = ests[:-1], ests[-1]
        for a, b in zip(levels, levels[1:]):
            assert all(bc <= ac for ac, bc in zip(a, b))
        # f == 1: F(y) = y1*y2, so b(x) = max(x)/cap on each axis
        b_true = max(x) / 16.0
        for k, est in enumerate(levels):
            pitch = 16.0 / (8 * 2 ** k)
            assert all(0 <= c - b_true <= pitch + 1e-12 for c in est)
        assert all(abs(c - b_true) < 1e-9 for c in final)


class TestAxioms:
    def test_all_families_pass(self):
        fams = [
            (StandardContour([2, 1]), box_samples(150, seed=1)),
            (TruncatedContour(StandardContour([1, 1]), [2.0, 2.0]),
             box_samples(150, seed=2)),
            (DistanceTypeContour([1, 1], exp_decay_density([1, 1]),
                                 quad_depth=7, search_cap=24.0),
             box_samples(100, xmax=1.5, emax=0.2, seed=4)),
            (ComponentwiseShiftContour([exp_decay_density([0.5])] * 2,
                                       [lambda e: e, lambda e: 2 * e],
                                       quad_depth=8, search_cap=24.0),
             box_samples(100, xmax=1.2, emax=0.6, seed=5)),
            (MultivariateShiftContour([exp_decay_density([0.6, 0.2]),
                                       exp_decay_density([0.1, 0.8])], [1, 1],
                                      grid0=8, refine_levels=3,
                                      search_cap=12.0, quad_depth=7),
             box_samples(100, xmax=1.0, emax=0.5, seed=6)),
        ]
        for contour, samples in fams:
            report = check_contour_axioms(contour, samples, tol=1e-6)
            assert report.passed, (type(contour).__name__, report.worst_violation)

    def test_curve_family_passes(self):
        curve = CurveContour([(0, (0, 0)), (1, (1, 0.5)), (3, (3, 2.5)),
                              (12, (12, 12.5))], [1])
        rng = random.Random(8)

        def samples():
            for _ in range(150):
                t, c = rng.uniform(0, 3), rng.uniform(0, 3)
                base = curve._point_at(t)
                yield (base[0], base[1] + c), rng.uniform(0, 1), rng.uniform(0, 1)

        report = check_contour_axioms(curve, samples(), tol=1e-6)
        assert report.passed, report.worst_violation

    def test_rectangle_variant_breaks_lax_action(self):
        rect = DistanceTypeContour([1, 1], exp_decay_density([0.3, 0.3]),
                                   quad_depth=7, search_cap=24.0,
                                   region="rectangle")
        report = check_contour_axioms(
            rect, box_samples(50, xmax=1.5, emax=0.3, seed=7), tol=1e-6
        )
        assert not report.passed
        assert report.worst_lax > 1e-3
