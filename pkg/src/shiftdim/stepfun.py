"""Monotone step functions with exact piecewise integration.

A `StepFunction` is right-continuous and non-increasing: value ``values[k]``
holds on ``[breakpoints[k], breakpoints[k+1])`` and the last value holds on
``[breakpoints[-1], oo)``.  Values live in the naturals extended by
``math.inf``; breakpoints are exact rationals.  On top of these we build the
hierarchical stabilization of a discrete invariant over a finite
pseudometric space, the interleaving distance, and the non-additivity
diagnostics (locus and L^p error).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Value = float  # natural number or math.inf


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        if math.isinf(x) or math.isnan(x):
            raise ValueError(f"breakpoint must be finite, got {x}")
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {x!r} as an exact breakpoint")


def _check_value(v) -> Value:
    if v == math.inf:
        return math.inf
    if isinstance(v, bool) or not isinstance(v, int):
        raise TypeError(f"step function values are naturals or inf, got {v!r}")
    if v < 0:
        raise ValueError(f"negative step function value {v}")
    return v


class StepFunction:
    """Right-continuous, non-increasing step function on [0, oo)."""

    __slots__ = ("breakpoints", "values")

    def __init__(self, breakpoints: Sequence, values: Sequence):
        bps = [_as_fraction(b) for b in breakpoints]
        vals = [_check_value(v) for v in values]
        if len(bps) != len(vals) or not bps:
            raise ValueError("need equally many breakpoints and values, at least one")
        if bps[0] != 0:
            raise ValueError("the first breakpoint must be 0")
        if any(b2 <= b1 for b1, b2 in zip(bps, bps[1:])):
            raise ValueError("breakpoints must be strictly increasing")
        if any(v2 > v1 for v1, v2 in zip(vals, vals[1:])):
            raise ValueError("step function must be non-increasing")
        # canonical form: merge adjacent equal values
        cb, cv = [bps[0]], [vals[0]]
        for b, v in zip(bps[1:], vals[1:]):
            if v != cv[-1]:
                cb.append(b)
                cv.append(v)
        object.__setattr__(self, "breakpoints", tuple(cb))
        object.__setattr__(self, "values", tuple(cv))

    def __setattr__(self, name, value):
        raise AttributeError("StepFunction is immutable")

    @classmethod
    def constant(cls, value) -> "StepFunction":
        return cls([0], [value])

    def __call__(self, t) -> Value:
        t = _as_fraction(t)
        if t < 0:
            raise ValueError("step functions are defined on [0, oo)")
        lo, hi = 0, len(self.breakpoints) - 1
        while lo < hi:  # last breakpoint <= t
            mid = (lo + hi + 1) // 2
            if self.breakpoints[mid] <= t:
                lo = mid
            else:
                hi = mid - 1
        return self.values[lo]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, StepFunction)
            and self.breakpoints == other.breakpoints
            and self.values == other.values
        )

    def __hash__(self) -> int:
        return hash((self.breakpoints, self.values))

    def __repr__(self) -> str:
        segs = ", ".join(f"{v}@[{b},.)" for b, v in zip(self.breakpoints, self.values))
        return f"StepFunction({segs})"


def _merged_breakpoints(fs: Sequence[StepFunction]) -> list[Fraction]:
    cuts = set()
    for f in fs:
        cuts.update(f.breakpoints)
    return sorted(cuts)


def sum_curves(fs: Sequence[StepFunction]) -> StepFunction:
    """Pointwise sum; infinity is absorbing."""
    if not fs:
        return StepFunction.constant(0)
    cuts = _merged_breakpoints(fs)
    vals = []
    for b in cuts:
        total = 0
        for f in fs:
            val = f(b)
            total = math.inf if (val == math.inf or total == math.inf) else total + val
        vals.append(total)
    return StepFunction(cuts, vals)


def stabilize(distances: Sequence[Sequence], values: Sequence, x: int) -> StepFunction:
    """Hierarchical stabilization of a discrete invariant at a point.

    Parameters
    ----------
    distances : square matrix of an extended pseudometric (entries may be
        ``math.inf``); must be symmetric with zero diagonal.
    values : one natural number per point.
    x : index of the point to stabilize at.

    Returns the step function ``tau -> min { values[y] : d(x, y) <= tau }``.
    """
    n = len(distances)
    if any(len(row) != n for row in distances):
        raise ValueError("distance matrix must be square")
    for i in range(n):
        if distances[i][i] != 0:
            raise ValueError("distance matrix must have zero diagonal")
        for j in range(i):
            if distances[i][j] != distances[j][i]:
                raise ValueError("asymmetric distance matrix")
    if len(values) != n:
        raise ValueError("need one invariant value per point")
    row = distances[x]
    radii = sorted({_as_fraction(d) for d in row if d != math.inf})
    bps, vals = [], []
    for radius in radii:
        ball_min = min(values[y] for y in range(n) if row[y] != math.inf and _as_fraction(row[y]) <= radius)
        bps.append(radius)
        vals.append(ball_min)
    return StepFunction(bps, vals)


def interleaving_distance(f: StepFunction, g: StepFunction) -> float:
    """inf { eps >= 0 : f(t+eps) <= g(t) and g(t+eps) <= f(t) for all t }.

    Exact over the breakpoints; returns ``math.inf`` when no shift works
    (e.g. one function is infinite where the other is bounded).
    """

    def ok(eps: Fraction) -> bool:
        # both functions are non-increasing, so each condition only needs
        # checking at the other function's breakpoints
        for t in g.breakpoints:
            if f(t + eps) > g(t):
                return False
        for t in f.breakpoints:
            if g(t + eps) > f(t):
                return False
        return True

    candidates = {Fraction(0)}
    for bf in f.breakpoints:
        for bg in g.breakpoints:
            d = bf - bg
            candidates.add(abs(d))
    cands = sorted(candidates)
    if not ok(cands[-1]):
        return math.inf
    lo, hi = 0, len(cands) - 1  # ok is monotone in eps
    while lo < hi:
        mid = (lo + hi) // 2
        if ok(cands[mid]):
            hi = mid
        else:
            lo = mid + 1
    val = cands[lo]
    return float(val)


def _segments(fs: Sequence[StepFunction]):
    """Common refinement: yields (start, end_or_None, values-per-function)."""
    cuts = _merged_breakpoints(fs)
    for k, b in enumerate(cuts):
        end = cuts[k + 1] if k + 1 < len(cuts) else None
        yield b, end, [f(b) for f in fs]


def lp_distance(f: StepFunction, g: StepFunction, p) -> float:
    """(integral of |f - g|^p)^(1/p), exact up to the final p-th root.

    Infinite whenever |f - g| is nonzero on an interval of infinite length
    or an infinite value meets a finite one on positive length.
    """
    if p < 1:
        raise ValueError("lp_distance needs p >= 1")
    total = Fraction(0)
    float_total = 0.0
    exact = isinstance(p, int) or (isinstance(p, Fraction) and p.denominator == 1)
    for start, end, (fv, gv) in _segments([f, g]):
        if fv == gv:
            continue
        if fv == math.inf or gv == math.inf:
            return math.inf
        diff = abs(fv - gv)
        if end is None:
            return math.inf
        length = end - start
        if exact:
            total += length * Fraction(diff) ** int(p)
        else:
            float_total += float(length) * float(diff) ** float(p)
    if exact:
        if p == 1:
            return float(total)
        return float(total) ** (1.0 / float(p))
    return float_total ** (1.0 / float(p))


def locus_nonadditivity(
    summand_curves: Sequence[StepFunction], sum_curve: StepFunction
) -> list[tuple[Fraction, Fraction | None]]:
    """Maximal half-open intervals where the sum of the summand curves
    differs from the curve of the direct sum.  ``None`` as right endpoint
    means the interval is unbounded."""
    combined = sum_curves(summand_curves)
    intervals: list[list] = []
    for start, end, (a, b) in _segments([combined, sum_curve]):
        if a == b:
            continue
        if intervals and intervals[-1][1] == start:
            intervals[-1][1] = end
        else:
            intervals.append([start, end])
    return [(a, b) for a, b in intervals]


def err_vp(summand_curves: Sequence[StepFunction], sum_curve: StepFunction, p) -> float:
    """L^p magnitude of non-additivity.

    Requires the summand total to dominate the direct-sum curve pointwise
    (shift-dimension is sub-additive); a violation signals an upstream bug.
    """
    combined = sum_curves(summand_curves)
    for start, _end, (a, b) in _segments([combined, sum_curve]):
        if a < b:
            raise ValueError(
                f"sub-additivity violated at tau={start}: sum of curves {a} < direct sum {b}"
            )
    return lp_distance(combined, sum_curve, p)
