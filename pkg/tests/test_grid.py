import random

import pytest

from shiftdim import (
    ComputationRefused,
    Degree,
    DirectSumModule,
    GridModule,
    HomogeneousElement,
    IntervalModule,
    StepFunction,
    beta0_grid,
    bruteforce_v_basis,
    direct_sum_grids,
    generators_grid,
    grid_from_intervals,
    is_v_annihilating,
    scale_grid,
    shift_dimension_bruteforce,
    stable_rank_curve_grid,
    submodule_closure,
    support_contains,
)
from shiftdim.io import module_from_json

from conftest import load_fixture, random_interval_module, random_direction


@pytest.fixture(scope="module")
def quiver():
    return module_from_json(load_fixture("indecomposable_grid.json"))


COUNTEREXAMPLE = DirectSumModule(
    [
        IntervalModule([Degree(1, 0)], [Degree(1, 2)]),
        IntervalModule([Degree(0, 1)], [Degree(2, 1)]),
    ]
)


class TestGridFromIntervals:
    def test_free_generator_all_identity(self):
        grid = grid_from_intervals(IntervalModule([Degree(0, 0)]), Degree(1, 1))
        assert all(d == 1 for col in grid.dims for d in col)
        for mat in list(grid.hmaps.values()) + list(grid.vmaps.values()):
            assert mat == ((1,),)

    def test_counterexample_fiber_dims(self):
        grid = grid_from_intervals(COUNTEREXAMPLE, Degree(1, 1))
        m, n = COUNTEREXAMPLE.summands
        for i, x in enumerate(grid.xs):
            for j, y in enumerate(grid.ys):
                d = Degree(x, y)
                expected = int(support_contains(m, d)) + int(support_contains(n, d))
                assert grid.dims[i][j] == expected
        # two-dimensional exactly on upset((1,1)) minus the relation upsets
        two = [
            (x, y)
            for i, x in enumerate(grid.xs)
            for j, y in enumerate(grid.ys)
            if grid.dims[i][j] == 2
        ]
        assert two == [
            (x, y)
            for i, x in enumerate(grid.xs)
            for j, y in enumerate(grid.ys)
            if Degree(1, 1) <= Degree(x, y)
            and not Degree(1, 2) <= Degree(x, y)
            and not Degree(2, 1) <= Degree(x, y)
        ]

    def test_rational_scaling(self):
        from fractions import Fraction

        m = IntervalModule([Degree(0, 5), Degree(5, Fraction(3, 2))],
                           [Degree(2, 6), Degree(9, Fraction(3, 2))])
        grid = grid_from_intervals(m, Degree(2, 1))
        assert grid.scale == 2
        assert beta0_grid(grid) == 2


class TestQuiverFixture:
    def test_beta0(self, quiver):
        assert beta0_grid(quiver) == 5

    def test_generator_degrees(self, quiver):
        degrees = sorted(g.degree for g in generators_grid(quiver))
        assert degrees == [(0, 4), (2, 4), (4, 2), (6, 1), (8, 0)]

    def test_shift_dimension(self, quiver):
        assert shift_dimension_bruteforce(quiver, Degree(2, 1)) == 2

    def test_published_basis_annihilates(self, quiver):
        basis = [HomogeneousElement((0, 4), (1,)), HomogeneousElement((6, 1), (1,))]
        assert is_v_annihilating(quiver, basis, Degree(2, 1))
        # a single element cannot do it
        assert not is_v_annihilating(quiver, basis[:1], Degree(2, 1))

    def test_curve(self, quiver):
        assert stable_rank_curve_grid(quiver, Degree(2, 1)) == StepFunction(
            [0, 1, 2], [5, 2, 0]
        )

    def test_commutativity_rejects_perturbation(self):
        data = load_fixture("indecomposable_grid.json")
        data["vmaps"]["8,0"] = [1, 0]  # diagonal map flattened to a slot map
        with pytest.raises(ValueError, match="commute"):
            module_from_json(data)


class TestClosure:
    def test_empty_set(self, quiver):
        closure = submodule_closure(quiver, [])
        assert all(rows == () for rows in closure.values())

    def test_full_generators_span_everything(self, quiver):
        closure = submodule_closure(quiver, generators_grid(quiver))
        for i, x in enumerate(quiver.xs):
            for j, y in enumerate(quiver.ys):
                assert len(closure[(x, y)]) == quiver.dims[i][j]

    def test_counterexample_diagonal_element(self):
        grid = grid_from_intervals(COUNTEREXAMPLE, Degree(1, 1))
        s = [HomogeneousElement((1, 1), (1, 1))]
        closure = submodule_closure(grid, s)
        # at (2,1) the second summand is dead: the push is (1,) and spans
        assert closure[(2, 1)] == ((1,),)
        assert is_v_annihilating(grid, s, Degree(1, 1))
        assert not is_v_annihilating(grid, [], Degree(1, 1))


class TestAnnihilation:
    def test_full_generators_always_annihilate(self, quiver):
        gens = generators_grid(quiver)
        for v in (Degree(0, 0), Degree(1, 0), Degree(2, 1), Degree(3, 2)):
            assert is_v_annihilating(quiver, gens, v)

    def test_empty_set_on_free_module(self):
        grid = grid_from_intervals(IntervalModule([Degree(0, 0)]), Degree(1, 1))
        assert not is_v_annihilating(grid, [], Degree(1, 1))

    def test_margin_refusal(self):
        grid = grid_from_intervals(IntervalModule([Degree(0, 0)]), Degree(1, 1))
        with pytest.raises(ComputationRefused):
            is_v_annihilating(grid, [], Degree(50, 0))

    def test_double_margin_agreement(self, rng):
        # enlarging the stabilization margin never changes the verdict
        for _ in range(40):
            m = random_interval_module(rng, max_gens=3, box=5, max_rels=2)
            v = random_direction(rng, vmax=3)
            small = grid_from_intervals(m, v)
            big = grid_from_intervals(m, Degree(*(2 * c for c in v.coords)))
            w = v.scale(small.scale)
            d_small = shift_dimension_bruteforce(small, w, cap=10)
            d_big = shift_dimension_bruteforce(big, w, cap=10)
            assert d_small == d_big


class TestBruteForce:
    def test_counterexample_add(self):
        grid = grid_from_intervals(COUNTEREXAMPLE, Degree(1, 1))
        dim, witness = bruteforce_v_basis(grid, Degree(1, 1))
        assert dim == 1
        assert witness[0].degree == (1, 1) and witness[0].vector == (1, 1)

    def test_zero_direction_is_beta0(self, quiver):
        assert shift_dimension_bruteforce(quiver, Degree(0, 0)) == 5

    def test_cap_exceeded_returns_none(self):
        free3 = DirectSumModule([IntervalModule([Degree(0, 0)])] * 3)
        grid = grid_from_intervals(free3, Degree(1, 1))
        assert shift_dimension_bruteforce(grid, Degree(1, 1), cap=2) is None

    def test_deterministic_witness(self, quiver):
        a = bruteforce_v_basis(quiver, Degree(2, 1))
        b = bruteforce_v_basis(quiver, Degree(2, 1))
        assert a == b

    def test_scalar_normalization_p3(self):
        # over F_3 the witness search is independent of scalar representatives
        m = IntervalModule([Degree(1, 0)], [Degree(1, 2)])
        n = IntervalModule([Degree(0, 1)], [Degree(2, 1)])
        grid = grid_from_intervals(DirectSumModule([m, n]), Degree(1, 1), p=3)
        dim, witness = bruteforce_v_basis(grid, Degree(1, 1))
        assert dim == 1
        vec = witness[0].vector
        assert vec[0] == 1  # normalized: leading entry one
        doubled = HomogeneousElement.make(witness[0].degree,
                                          tuple((2 * c) % 3 for c in vec), 3)
        assert doubled.vector == vec or is_v_annihilating(grid, [doubled], Degree(1, 1))


class TestLatticeSurgery:
    def test_scale_preserves_beta0_and_dims(self, quiver):
        doubled = scale_grid(quiver, 2, pad=(2, 2))
        assert beta0_grid(doubled) == 5
        assert shift_dimension_bruteforce(doubled, Degree(4, 2)) == 2
        assert shift_dimension_bruteforce(doubled, Degree(2, 1)) == 5

    def test_direct_sum_beta0_adds(self, rng):
        for _ in range(20):
            a = random_interval_module(rng, max_gens=3, box=5, max_rels=2)
            b = random_interval_module(rng, max_gens=3, box=5, max_rels=2)
            ga = grid_from_intervals(a, Degree(1, 1))
            gb = grid_from_intervals(b, Degree(1, 1))
            from shiftdim import beta0

            assert beta0_grid(direct_sum_grids(ga, gb)) == beta0(a) + beta0(b)

    def test_field_mismatch_rejected(self):
        a = grid_from_intervals(IntervalModule([Degree(0, 0)]), Degree(1, 1), p=2)
        b = grid_from_intervals(IntervalModule([Degree(0, 0)]), Degree(1, 1), p=3)
        with pytest.raises(ValueError):
            direct_sum_grids(a, b)


class TestValidation:
    def test_shape_mismatch(self):
        with pytest.raises(ValueError, match="shape"):
            GridModule((0, 1), (0, 1), ((1, 1), (1, 2)), {}, {})

    def test_nonprime_field(self):
        with pytest.raises(ValueError, match="prime"):
            GridModule((0, 1), (0, 1), ((0, 0), (0, 0)), p=6)

    def test_curve_workers_match_sequential(self, quiver):
        seq = stable_rank_curve_grid(quiver, Degree(2, 1), workers=1)
        par = stable_rank_curve_grid(quiver, Degree(2, 1), workers=4)
        assert seq == par
