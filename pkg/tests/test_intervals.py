import random

import pytest

from shiftdim import (
    Degree,
    DirectSumModule,
    IntervalModule,
    MalformedModule,
    Staircase,
    beta0,
    shift_is_nonzero,
    support_contains,
    truncate,
)

from conftest import random_interval_module


class TestStaircase:
    def test_minimization_and_sort(self):
        s = Staircase([Degree(2, 4), Degree(1, 3), Degree(3, 1), Degree(2, 4)])
        assert list(s) == [Degree(1, 3), Degree(3, 1)]  # (2,4) dominated, sorted

    def test_antichain_invariant(self, rng):
        for _ in range(200):
            pts = [Degree(rng.randint(0, 8), rng.randint(0, 8)) for _ in range(10)]
            s = Staircase(pts)
            for p in s:
                for q in s:
                    assert p is q or not p <= q

    def test_two_dim_sort_order(self):
        s = Staircase([Degree(4, 6), Degree(0, 8), Degree(11, 0)])
        xs = [p.coords[0] for p in s]
        ys = [p.coords[1] for p in s]
        assert xs == sorted(xs) and ys == sorted(ys, reverse=True)


class TestIntervalModule:
    def test_bad_relation_rejected(self):
        with pytest.raises(MalformedModule):
            IntervalModule([Degree(1, 1)], [Degree(0, 0)])

    def test_swallowed_generator_dropped(self):
        m = IntervalModule([Degree(1, 1), Degree(5, 0)], [Degree(1, 1)])
        assert list(m.generators) == [Degree(5, 0)]
        # the old relation still cuts the surviving support via its join
        assert not support_contains(m, Degree(5, 1))
        assert support_contains(m, Degree(5, 0))

    def test_zero_module(self):
        z = IntervalModule([])
        assert z.is_zero() and beta0(z) == 0
        killed = IntervalModule([Degree(2, 2)], [Degree(2, 2)])
        assert killed.is_zero()


class TestSupport:
    def test_examples(self):
        m = IntervalModule([Degree(1, 0)], [Degree(1, 2)])
        assert support_contains(m, Degree(1, 1))
        assert not support_contains(m, Degree(1, 2))
        assert not support_contains(m, Degree(0, 5))

    def test_order_convexity(self, rng):
        # d <= f <= e with d, e in the support forces f in the support
        for _ in range(100):
            m = random_interval_module(rng, max_gens=5, box=10, max_rels=3)
            pts = [Degree(rng.randint(0, 14), rng.randint(0, 14)) for _ in range(40)]
            inside = [p for p in pts if support_contains(m, p)]
            for d in inside:
                for e in inside:
                    if d <= e:
                        f = Degree(
                            (d.coords[0] + e.coords[0]) / 2,
                            (d.coords[1] + e.coords[1]) / 2,
                        )
                        assert support_contains(m, f)


class TestShiftIsNonzero:
    def test_examples(self):
        m = IntervalModule([Degree(3, 1), Degree(1, 3)], [Degree(4, 4)])
        # (3,1) + (2,2) = (5,3) is not above (4,4), so the shift survives
        assert shift_is_nonzero(m, Degree(3, 1), Degree(2, 2))
        assert not shift_is_nonzero(m, Degree(3, 1), Degree(3, 3))
        free = IntervalModule([Degree(0, 0)])
        assert shift_is_nonzero(free, Degree(0, 0), Degree(7, 9))

    def test_non_generator_rejected(self):
        m = IntervalModule([Degree(1, 0)], [Degree(1, 2)])
        with pytest.raises(ValueError):
            shift_is_nonzero(m, Degree(0, 0), Degree(1, 1))


class TestTruncate:
    def test_examples(self):
        free = IntervalModule([Degree(0, 0)])
        t = truncate(free, Degree(2, 2))
        assert list(t.generators) == [Degree(0, 0)]
        assert list(t.relations) == [Degree(2, 2)]

        m = IntervalModule([Degree(3, 1), Degree(1, 3)], [Degree(4, 4)])
        t = truncate(m, Degree(3, 3))
        assert list(t.relations) == [Degree(3, 3)]

        m = IntervalModule([Degree(1, 0)], [Degree(1, 2)])
        t = truncate(m, Degree(5, 5))
        assert list(t.relations) == [Degree(1, 2)]

    def test_support_formula(self, rng):
        for _ in range(150):
            m = random_interval_module(rng, max_gens=4, box=8, max_rels=2)
            alpha = Degree(rng.randint(0, 10), rng.randint(0, 10))
            t = truncate(m, alpha)
            for _ in range(25):
                d = Degree(rng.randint(0, 12), rng.randint(0, 12))
                expected = support_contains(m, d) and not alpha <= d
                assert support_contains(t, d) == expected
            assert beta0(t) <= beta0(m)
            if not any(alpha <= g for g in m.generators):
                assert t.generators == m.generators


class TestBeta0:
    def test_examples(self):
        m = IntervalModule(
            [Degree(0, 8), Degree(4, 6), Degree(6, 4), Degree(8, 2), Degree(11, 0)]
        )
        assert beta0(m) == 5
        assert beta0(IntervalModule([])) == 0
        free = IntervalModule([Degree(2, 2)])
        assert beta0(DirectSumModule([m, free])) == 6
