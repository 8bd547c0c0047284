from fractions import Fraction

import pytest

from shiftdim import INFINITY, Degree, join, meet, parse_degree
from shiftdim.degrees import DimensionMismatch, common_scale, format_degree


def test_componentwise_order():
    assert Degree(1, 1) <= Degree(1, 2)
    assert not Degree(1, 3) <= Degree(2, 2)
    assert Degree(1, 3) <= Degree(1, 3)
    assert Degree(0, 0) < Degree(0, 1)


def test_negative_coordinates_rejected():
    with pytest.raises(ValueError):
        Degree(-1, 0)


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        meet(Degree(1, 2), Degree(1, 2, 3))
    with pytest.raises(DimensionMismatch):
        Degree(1, 2) + Degree(1, 2, 3)


def test_meet_join_examples():
    assert meet(Degree(3, 1), Degree(1, 3)) == Degree(1, 1)
    assert join(Degree(3, 1), Degree(1, 3)) == Degree(3, 3)
    d = Degree(Fraction(5, 2), 7)
    assert meet(d, d) == d


def test_addition_and_scaling():
    assert Degree(1, 2) + Degree(3, 4) == Degree(4, 6)
    assert Degree(1, 2).scale(Fraction(3, 2)) == Degree(Fraction(3, 2), 3)


def test_infinity_absorbs():
    assert Degree(5, 5) <= INFINITY
    assert not INFINITY <= Degree(5, 5)
    assert INFINITY + Degree(1, 1) is INFINITY
    assert Degree(1, 1) + INFINITY is INFINITY
    assert INFINITY <= INFINITY


def test_parse_and_format():
    d = parse_degree("3/2,1")
    assert d == Degree(Fraction(3, 2), 1)
    assert format_degree(d) == "3/2,1"
    with pytest.raises(ValueError):
        parse_degree("1,,2")


def test_common_scale():
    ds = [Degree(Fraction(1, 2), 1), Degree(Fraction(2, 3), Fraction(1, 6))]
    assert common_scale(ds) == 6
