"""Exact degree arithmetic on the parameter poset.

A degree is a point of (Q_{>=0})^r with the componentwise partial order.
All coordinates are `fractions.Fraction` so that comparisons, meets/joins
and the divisibility tests of the clustering algorithm are exact.  The
poset is extended by a single top element ``INFINITY`` which absorbs
addition and dominates every degree.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Coordinate = Union[int, Fraction, str]


class DimensionMismatch(ValueError):
    """Raised when two degrees of different dimension are combined."""


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a degree coordinate")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        # Floats only enter through JSON written by ourselves; 0.5 etc. are
        # binary-exact so Fraction(float) is the intended value.
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact coordinate")


class Degree:
    """A point of the parameter poset, with exact rational coordinates."""

    __slots__ = ("coords",)

    def __init__(self, *coords: Coordinate):
        if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
            coords = tuple(coords[0])
        converted = tuple(_coerce(c) for c in coords)
        if not converted:
            raise ValueError("a degree needs at least one coordinate")
        if any(c < 0 for c in converted):
            raise ValueError(f"negative coordinate in degree {converted}")
        object.__setattr__(self, "coords", converted)

    def __setattr__(self, name, value):
        raise AttributeError("Degree is immutable")

    @property
    def r(self) -> int:
        return len(self.coords)

    def _check_dim(self, other: "Degree") -> None:
        if self.r != other.r:
            raise DimensionMismatch(f"dimension mismatch: {self.r} vs {other.r}")

    # -- componentwise order -------------------------------------------------

    def __le__(self, other) -> bool:
        if other is INFINITY:
            return True
        self._check_dim(other)
        return all(a <= b for a, b in zip(self.coords, other.coords))

    def __ge__(self, other) -> bool:
        if other is INFINITY:
            return False
        return other.__le__(self)

    def __eq__(self, other) -> bool:
        if other is INFINITY:
            return False
        return isinstance(other, Degree) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __lt__(self, other) -> bool:
        return self <= other and self != other

    # -- monoid action -------------------------------------------------------

    def __add__(self, other):
        if other is INFINITY:
            return INFINITY
        self._check_dim(other)
        return Degree(*(a + b for a, b in zip(self.coords, other.coords)))

    def scale(self, factor) -> "Degree":
        f = _coerce(factor) if not isinstance(factor, Fraction) else factor
        if f < 0:
            raise ValueError("negative scaling of a degree")
        return Degree(*(f * c for c in self.coords))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def __iter__(self):
        return iter(self.coords)

    def __repr__(self) -> str:
        return "Degree(%s)" % ", ".join(_fmt(c) for c in self.coords)


class _Infinity:
    """Top element of the extended poset: x <= INFINITY, INFINITY + x = INFINITY."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __le__(self, other) -> bool:
        return other is INFINITY

    def __ge__(self, other) -> bool:
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __eq__(self, other) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("shiftdim-infinity")

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = _Infinity()

#: A degree or the top element.
ExtendedDegree = Union[Degree, _Infinity]


def meet(d: Degree, e: Degree) -> Degree:
    """Componentwise minimum (the gcd degree of two monomials)."""
    d._check_dim(e)
    return Degree(*(min(a, b) for a, b in zip(d.coords, e.coords)))


def join(d: Degree, e: Degree) -> Degree:
    """Componentwise maximum (the lcm degree of two monomials)."""
    d._check_dim(e)
    return Degree(*(max(a, b) for a, b in zip(d.coords, e.coords)))


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def parse_degree(text: str) -> Degree:
    """Parse a comma-separated rational tuple such as ``"3/2,1"``."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(not p for p in parts):
        raise ValueError(f"malformed degree {text!r}")
    return Degree(*(Fraction(p) for p in parts))


def format_degree(d: Degree) -> str:
    return ",".join(_fmt(c) for c in d.coords)


def common_scale(degrees: Iterable[Degree]) -> int:
    """Smallest positive integer clearing every denominator."""
    import math

    scale = 1
    for d in degrees:
        for c in d.coords:
            scale = scale * c.denominator // math.gcd(scale, c.denominator)
    return scale
