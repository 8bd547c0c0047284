"""Multipersistence contours: lax actions C(x, eps) on the extended quadrant.

Six families: the standard contour x + eps*v, its truncation at a degree
alpha, travel along translated monotone polylines, the distance type driven
by the mass of L-shaped regions, the component-wise shift type, and the
multivariate shift type with its grid scheme for the superlevel meet b(x).

Numeric families discretize the density by midpoint sampling on a dyadic
grid over ``[0, search_cap]^r`` (zero outside) and then integrate that
piecewise-constant field *exactly*.  The computed map is therefore itself a
true contour of a true density, so the lax-action axioms hold to floating
point accuracy; the reported accuracy tracks the distance to the requested
density as the last dyadic refinement delta plus a truncation estimate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Sequence

import numpy as np

from .degrees import INFINITY

Vec = tuple[float, ...]


@dataclass(frozen=True)
class ContourResult:
    """Value of a contour evaluation plus a numeric accuracy estimate
    (0 for the exact families)."""

    value: object  # Vec or INFINITY
    accuracy: float = 0.0

    @property
    def is_infinite(self) -> bool:
        return self.value is INFINITY


def _leq(a, b, tol: float = 0.0) -> bool:
    if b is INFINITY:
        return True
    if a is INFINITY:
        return False
    return all(ac <= bc + tol for ac, bc in zip(a, b))


# ---------------------------------------------------------------------------
# builtin densities
# ---------------------------------------------------------------------------

def const_density(value: float = 1.0) -> Callable:
    """f == value."""
    def f(points: np.ndarray) -> np.ndarray:
        return np.full(points.shape[:-1], float(value))
    return f


def exp_decay_density(rates: Sequence[float]) -> Callable:
    """f(y) = exp(-sum_i rates[i] * y_i)."""
    r = np.asarray(rates, dtype=float)
    def f(points: np.ndarray) -> np.ndarray:
        return np.exp(-(points * r).sum(axis=-1))
    return f


def gauss_density(sigma: float = 1.0, center: Sequence[float] | None = None) -> Callable:
    """Isotropic Gaussian bump, not normalized."""
    def f(points: np.ndarray) -> np.ndarray:
        c = np.zeros(points.shape[-1]) if center is None else np.asarray(center, float)
        d2 = ((points - c) ** 2).sum(axis=-1)
        return np.exp(-d2 / (2.0 * float(sigma) ** 2))
    return f


BUILTIN_DENSITIES = {
    "const": const_density,
    "exp_decay": exp_decay_density,
    "gauss": gauss_density,
}


class PiecewiseConstantField:
    """A density midpoint-sampled on a dyadic grid, integrated exactly.

    The field lives on ``[0, cap]^r`` with ``2**depth`` cells per axis and
    is zero outside.  ``cum(y)`` returns the exact integral of the sampled
    field over the box ``[0, y]``; ``box(lo, hi)`` over ``[lo, hi]``.
    """

    def __init__(self, density: Callable, r: int, cap: float, depth: int):
        if cap <= 0:
            raise ValueError("search cap must be positive")
        if not 1 <= depth <= 14:
            raise ValueError("quadrature depth out of range")
        self.r = r
        self.cap = float(cap)
        self.n = 1 << depth
        self.h = self.cap / self.n
        axes = [np.linspace(self.h / 2, self.cap - self.h / 2, self.n)] * r
        mesh = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1)
        values = np.asarray(density(mesh), dtype=float)
        if values.shape != (self.n,) * r:
            raise ValueError("density callback returned a wrong shape")
        if np.any(values < 0) or not np.all(np.isfinite(values)):
            raise ValueError("negative or non-finite density sample detected")
        self.values = values
        cum = values
        for axis in range(r):
            cum = np.cumsum(cum, axis=axis)
            cum = np.insert(cum, 0, 0.0, axis=axis)
        self.cumcells = cum  # cumcells[k] = sum of cells strictly below k
        self.total = float(cum[(-1,) * r]) * self.h ** r

    def cum(self, y: Sequence[float]) -> float:
        """Exact integral of the sampled field over [0, y] (clamped to cap)."""
        ks, fracs = [], []
        for c in y:
            t = min(max(float(c), 0.0), self.cap)
            k = min(int(t / self.h), self.n)
            frac = t / self.h - k
            if k >= self.n:
                k, frac = self.n, 0.0
            ks.append(k)
            fracs.append(frac)
        total = 0.0
        vol_full = self.h ** self.r
        for partial in product((False, True), repeat=self.r):
            weight = 1.0
            lo_idx, hi_idx = [], []
            ok = True
            for a in range(self.r):
                if partial[a]:
                    if ks[a] >= self.n or fracs[a] == 0.0:
                        ok = False
                        break
                    weight *= fracs[a]
                    lo_idx.append(ks[a])
                    hi_idx.append(ks[a] + 1)
                else:
                    lo_idx.append(0)
                    hi_idx.append(ks[a])
            if not ok or weight == 0.0:
                continue
            block = self._block_sum(lo_idx, hi_idx)
            total += weight * block
        return float(total * vol_full)

    def _block_sum(self, lo, hi) -> float:
        """Sum of cell values over the index box [lo, hi) via the cumsum."""
        total = 0.0
        for corner in product((0, 1), repeat=self.r):
            idx = tuple(hi[a] if corner[a] else lo[a] for a in range(self.r))
            sign = (-1) ** (self.r - sum(corner))
            total += sign * self.cumcells[idx]
        return total

    def box(self, lo: Sequence[float], hi: Sequence[float]) -> float:
        """Exact integral over the box [lo, hi] by inclusion-exclusion."""
        total = 0.0
        for corner in product((0, 1), repeat=self.r):
            point = [hi[a] if corner[a] else lo[a] for a in range(self.r)]
            sign = (-1) ** (self.r - sum(corner))
            total += sign * self.cum(point)
        return total

    def upset_mass(self, lo: Sequence[float]) -> float:
        """Integral over { y >= lo } intersected with the field box."""
        return self.box(lo, [self.cap] * self.r)


# ---------------------------------------------------------------------------
# contour families
# ---------------------------------------------------------------------------

class Contour:
    """Common interface: ``evaluate(x, eps) -> ContourResult``."""

    r: int

    def evaluate(self, x, eps: float) -> ContourResult:
        if eps < 0:
            raise ValueError("contours take eps >= 0")
        if x is INFINITY:
            return ContourResult(INFINITY)
        x = tuple(float(c) for c in x)
        if len(x) != self.r:
            raise ValueError(f"point has dimension {len(x)}, contour has {self.r}")
        return self._eval(x, float(eps))

    def _eval(self, x: Vec, eps: float) -> ContourResult:
        raise NotImplementedError


class StandardContour(Contour):
    """C(x, eps) = x + eps * v."""

    def __init__(self, v: Sequence[float]):
        self.v = tuple(float(c) for c in v)
        if any(c < 0 for c in self.v):
            raise ValueError("standard contour needs v >= 0")
        self.r = len(self.v)

    def _eval(self, x: Vec, eps: float) -> ContourResult:
        return ContourResult(tuple(c + eps * vc for c, vc in zip(x, self.v)))


class TruncatedContour(Contour):
    """Inner contour, sent to infinity as soon as alpha <= C(x, eps)."""

    def __init__(self, inner: Contour, alpha: Sequence[float]):
        self.inner = inner
        self.alpha = tuple(float(c) for c in alpha)
        self.r = inner.r
        if len(self.alpha) != self.r:
            raise ValueError("alpha dimension mismatch")

    def _eval(self, x: Vec, eps: float) -> ContourResult:
        res = self.inner.evaluate(x, eps)
        if res.is_infinite or _leq(self.alpha, res.value):
            return ContourResult(INFINITY, res.accuracy)
        return res


class CurveContour(Contour):
    """Travel along the translate of a monotone polyline through x.

    vertices: (parameter, point) pairs with strictly increasing parameters
    and componentwise non-decreasing points; the first point must touch a
    coordinate axis.  translation_axes lists the r-1 axes along which the
    base curve is translated; the remaining axis locates the translate.
    """

    def __init__(self, vertices: Sequence[tuple[float, Sequence[float]]],
                 translation_axes: Sequence[int]):
        self.ts = tuple(float(t) for t, _ in vertices)
        self.pts = tuple(tuple(float(c) for c in pt) for _, pt in vertices)
        if len(self.ts) < 2:
            raise ValueError("polyline needs at least two vertices")
        if any(b <= a for a, b in zip(self.ts, self.ts[1:])):
            raise ValueError("polyline parameters must be strictly increasing")
        self.r = len(self.pts[0])
        if any(len(p) != self.r for p in self.pts):
            raise ValueError("polyline points of mixed dimension")
        for a, b in zip(self.pts, self.pts[1:]):
            if any(bc < ac for ac, bc in zip(a, b)):
                raise ValueError("polyline must be componentwise non-decreasing")
        if min(self.pts[0]) != 0:
            raise ValueError("the base curve must start on a coordinate axis")
        axes = sorted(set(int(a) for a in translation_axes))
        if len(axes) != self.r - 1 or any(a < 0 or a >= self.r for a in axes):
            raise ValueError("translation axes must be r-1 distinct axis indices")
        self.translation_axes = tuple(axes)
        (self.q,) = [a for a in range(self.r) if a not in axes]

    def _point_at(self, t: float) -> Vec:
        k = 0
        while k + 1 < len(self.ts) - 1 and self.ts[k + 1] <= t:
            k += 1
        t0, t1 = self.ts[k], self.ts[k + 1]
        lam = (t - t0) / (t1 - t0)
        return tuple(a + lam * (b - a) for a, b in zip(self.pts[k], self.pts[k + 1]))

    def _eval(self, x: Vec, eps: float) -> ContourResult:
        q = self.q
        qs = [p[q] for p in self.pts]
        if not qs[0] <= x[q] <= qs[-1]:
            raise ValueError(
                f"x is not reachable: coordinate {q} outside the polyline range"
            )
        # parameter interval where the located coordinate equals x_q
        lo = hi = None
        for k in range(len(self.ts) - 1):
            a, b = qs[k], qs[k + 1]
            if a <= x[q] <= b:
                if a == b:
                    t_here = (self.ts[k], self.ts[k + 1])
                else:
                    t_hit = self.ts[k] + (x[q] - a) / (b - a) * (self.ts[k + 1] - self.ts[k])
                    t_here = (t_hit, t_hit)
                if lo is None:
                    lo, hi = t_here
                else:
                    lo, hi = min(lo, t_here[0]), max(hi, t_here[1])
        off_lo = self._point_at(lo)
        off_hi = self._point_at(hi)
        for a in self.translation_axes:
            if abs(off_lo[a] - off_hi[a]) > 1e-12:
                raise ValueError("x lies on more than one translate of the curve")
        offset = tuple(x[a] - off_lo[a] if a != q else 0.0 for a in range(self.r))
        t1 = lo + eps
        if t1 > self.ts[-1]:
            return ContourResult(INFINITY)
        pt = self._point_at(t1)
        return ContourResult(tuple(p + o for p, o in zip(pt, offset)))


def _two_depth(make_value, depth: int):
    fine = make_value(depth)
    coarse = make_value(max(depth - 1, 1))
    return fine, coarse


class DistanceTypeContour(Contour):
    """C(x, eps) = x + delta*v with the mass of the L-shape between x and
    x + delta*v equal to eps.

    region="rectangle" replaces the L-shape by the plain box [x, x+delta*v];
    that variant deliberately breaks the lax-action axiom and exists for the
    axiom checker.  A heuristic flags densities whose L-shape mass diverges
    (detected as non-vanishing mass near the truncation boundary) and
    returns infinity instead of a meaningless small delta.
    """

    def __init__(self, v: Sequence[float], density: Callable, tol: float = 1e-9,
                 quad_depth: int = 9, search_cap: float = 32.0,
                 region: str = "lshape"):
        self.v = tuple(float(c) for c in v)
        if any(c < 0 for c in self.v) or not any(self.v):
            raise ValueError("distance type needs v >= 0, v != 0")
        if tol <= 0:
            raise ValueError("tolerance must be positive")
        if region not in ("lshape", "rectangle"):
            raise ValueError(f"unknown region {region!r}")
        self.r = len(self.v)
        self.density = density
        self.tol = float(tol)
        self.quad_depth = int(quad_depth)
        self.search_cap = float(search_cap)
        self.region = region
        self._fields: dict[int, PiecewiseConstantField] = {}

    def _field(self, depth: int) -> PiecewiseConstantField:
        if depth not in self._fields:
            self._fields[depth] = PiecewiseConstantField(
                self.density, self.r, self.search_cap, depth
            )
        return self._fields[depth]

    def _mass(self, fld: PiecewiseConstantField, x: Vec, delta: float,
              base: float | None = None) -> float:
        shifted = [c + delta * vc for c, vc in zip(x, self.v)]
        if self.region == "rectangle":
            return fld.box(x, shifted)
        if base is None:
            base = fld.upset_mass(x)
        return base - fld.upset_mass(shifted)

    def _solve(self, fld: PiecewiseConstantField, x: Vec, eps: float):
        base = fld.upset_mass(x) if self.region == "lshape" else None
        hi = self.search_cap
        if self._mass(fld, x, hi, base) < eps:
            return None
        lo = 0.0
        for _ in range(60):
            mid = 0.5 * (lo + hi)
            if self._mass(fld, x, mid, base) >= eps:
                hi = mid
            else:
                lo = mid
        return hi

    def _eval(self, x: Vec, eps: float) -> ContourResult:
        if eps == 0.0:
            return ContourResult(x)
        if any(c > self.search_cap for c in x):
            return ContourResult(INFINITY)

        def value(depth: int):
            return self._solve(self._field(depth), x, eps)

        delta, delta_coarse = _two_depth(value, self.quad_depth)
        if delta is None:
            return ContourResult(INFINITY)
        # divergence heuristic: mass of the solved region concentrated near
        # the truncation boundary means the true L-shape mass diverges
        fld = self._field(self.quad_depth)
        if self.region == "lshape":
            mid = [c + 0.5 * (self.search_cap - c) for c in x]
            inner = self._mass_clipped(fld, x, delta, mid)
            full = self._mass(fld, x, delta)
            if full > 0 and (full - inner) / full > 0.25:
                return ContourResult(INFINITY, math.inf)
            tail = full - inner
        else:
            tail = 0.0
        refine = 0.0 if delta_coarse is None else abs(delta - delta_coarse)
        vmax = max(self.v)
        accuracy = (refine + tail) * vmax + self.search_cap * 2.0 ** -80 + 1e-12
        return ContourResult(
            tuple(c + delta * vc for c, vc in zip(x, self.v)), accuracy
        )

    def _mass_clipped(self, fld, x: Vec, delta: float, hi_box) -> float:
        shifted = [c + delta * vc for c, vc in zip(x, self.v)]
        total = 0.0
        # inclusion-exclusion of the upset mass inside the clipped box
        total += fld.box(x, hi_box)
        clipped = [min(s, h) for s, h in zip(shifted, hi_box)]
        total -= fld.box(clipped, hi_box) if all(s <= h for s, h in zip(shifted, hi_box)) else 0.0
        return total


class ComponentwiseShiftContour(Contour):
    """Apply a one-parameter shift-type contour on every axis.

    Axis i inverts the cumulative integral F_i at x_i and pushes the
    preimage by a super-additive function m_i of eps.
    """

    def __init__(self, densities: Sequence[Callable], shifts: Sequence[Callable],
                 tol: float = 1e-9, quad_depth: int = 10, search_cap: float = 32.0):
        if len(densities) != len(shifts):
            raise ValueError("need one shift function per axis density")
        if tol <= 0:
            raise ValueError("tolerance must be positive")
        self.r = len(densities)
        self.densities = list(densities)
        self.shifts = list(shifts)
        self.tol = float(tol)
        self.quad_depth = int(quad_depth)
        self.search_cap = float(search_cap)
        self._fields: dict[int, list[PiecewiseConstantField]] = {}
        self._check_shifts()

    def _check_shifts(self) -> None:
        probes = [0.0, 0.25, 0.5, 1.0, 1.75, 3.0]
        for k, m in enumerate(self.shifts):
            for a in probes:
                for b in probes:
                    if m(a + b) < m(a) + m(b) - 1e-9:
                        raise ValueError(f"shift function {k} is not super-additive")
                if m(a) < -1e-12:
                    raise ValueError(f"shift function {k} takes negative values")

    def _axis_fields(self, depth: int) -> list[PiecewiseConstantField]:
        if depth not in self._fields:
            self._fields[depth] = [
                PiecewiseConstantField(f, 1, self.search_cap, depth)
                for f in self.densities
            ]
        return self._fields[depth]

    @staticmethod
    def _invert(fld: PiecewiseConstantField, target: float):
        """Smallest t with cum([t]) == target, None when unreachable."""
        if target <= 0:
            return 0.0
        if target > fld.total:
            return None
        lo, hi = 0.0, fld.cap
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            if fld.cum([mid]) >= target:
                hi = mid
            else:
                lo = mid
        return hi

    def _eval(self, x: Vec, eps: float) -> ContourResult:
        def value(depth: int):
            fields = self._axis_fields(depth)
            out = []
            for c, fld, m in zip(x, fields, self.shifts):
                y = self._invert(fld, c)
                if y is None:
                    return None
                out.append(fld.cum([y + m(eps)]))
            return tuple(out)

        fine, coarse = _two_depth(value, self.quad_depth)
        if fine is None:
            return ContourResult(INFINITY)
        refine = (
            0.0
            if coarse is None
            else max(abs(a - b) for a, b in zip(fine, coarse))
        )
        # the contour may only move points up; guard against rounding
        clipped = tuple(max(f, c) for f, c in zip(fine, x))
        return ContourResult(clipped, refine + 1e-12)


class MultivariateShiftContour(Contour):
    """Shift type driven by r multivariate cumulative integrals.

    b(x) is the meet of the superlevel set B(x) = { y : F_j(y) >= x_j for
    all j }, located by intersecting B(x) with an equidistant grid and
    refining, then polished per coordinate by bisection (a further grid
    halving taken to convergence).  C(x, eps) joins F(b(x) + eps*v) with x.
    """

    def __init__(self, densities: Sequence[Callable], v: Sequence[float],
                 grid0: int = 8, refine_levels: int = 4,
                 search_cap: float = 16.0, quad_depth: int = 9):
        self.r = len(densities)
        self.densities = list(densities)
        self.v = tuple(float(c) for c in v)
        if len(self.v) != self.r:
            raise ValueError("direction dimension mismatch")
        if any(c < 0 for c in self.v):
            raise ValueError("multivariate shift needs v >= 0")
        if grid0 < 2 or refine_levels < 0:
            raise ValueError("need grid0 >= 2 and refine_levels >= 0")
        # grid levels must subdivide the dyadic quadrature lattice
        self.grid0 = 1 << (int(grid0) - 1).bit_length()
        self.refine_levels = int(refine_levels)
        self.search_cap = float(search_cap)
        self.quad_depth = int(quad_depth)
        while self.grid0 * (1 << self.refine_levels) > (1 << self.quad_depth):
            self.quad_depth += 1
        if self.quad_depth > 14:
            raise ValueError("grid0 * 2**refine_levels exceeds the quadrature range")
        self._fields: dict[int, list[PiecewiseConstantField]] = {}
        self._nodes: dict[int, np.ndarray] = {}

    def _field_set(self, depth: int) -> list[PiecewiseConstantField]:
        if depth not in self._fields:
            self._fields[depth] = [
                PiecewiseConstantField(f, self.r, self.search_cap, depth)
                for f in self.densities
            ]
        return self._fields[depth]

    def _node_cums(self, depth: int) -> np.ndarray:
        """F_j at all grid nodes, shape (r, n+1, ..., n+1)."""
        if depth not in self._nodes:
            fields = self._field_set(depth)
            self._nodes[depth] = np.stack(
                [fld.cumcells * fld.h ** self.r for fld in fields]
            )
        return self._nodes[depth]

    def b_estimates(self, x) -> list[Vec]:
        """Grid estimates of b(x) per refinement level (monotone decreasing),
        followed by the bisection-polished value.  Empty B gives []."""
        x = tuple(float(c) for c in x)
        fields = self._field_set(self.quad_depth)
        if any(c > fld.total for c, fld in zip(x, fields)):
            return []
        node_cums = self._node_cums(self.quad_depth)
        n = fields[0].n
        estimates = []
        for level in range(self.refine_levels + 1):
            per_axis = self.grid0 * (1 << level)
            stride = n // per_axis
            sub = node_cums[(slice(None),) + (slice(0, n + 1, stride),) * self.r]
            member = np.all(
                sub >= np.asarray(x).reshape((self.r,) + (1,) * self.r), axis=0
            )
            if not member.any():
                estimates.append(tuple(float(fields[0].cap) for _ in range(self.r)))
                continue
            idx = np.argwhere(member)
            pitch = fields[0].cap / per_axis
            est = tuple(float(idx[:, a].min()) * pitch for a in range(self.r))
            estimates.append(est)
        estimates.append(self._b_polished(x, estimates[-1]))
        return estimates

    def _b_polished(self, x: Vec, seed: Vec) -> Vec:
        fields = self._field_set(self.quad_depth)
        cap = fields[0].cap
        pitch = cap / (self.grid0 * (1 << self.refine_levels))

        def member_at(axis: int, t: float) -> bool:
            probe = [cap] * self.r
            probe[axis] = t
            return all(fld.cum(probe) >= c for fld, c in zip(fields, x))

        out = []
        for axis in range(self.r):
            hi = seed[axis]
            lo = max(hi - pitch, 0.0)
            if not member_at(axis, hi):
                out.append(hi)  # seed already minimal on this slice
                continue
            for _ in range(60):
                mid = 0.5 * (lo + hi)
                if member_at(axis, mid):
                    hi = mid
                else:
                    lo = mid
            out.append(hi)
        return tuple(out)

    def _eval(self, x: Vec, eps: float) -> ContourResult:
        fields = self._field_set(self.quad_depth)
        if any(c > fld.total for c, fld in zip(x, fields)):
            return ContourResult(INFINITY)
        ests = self.b_estimates(x)
        b = ests[-1]
        shifted = [bc + eps * vc for bc, vc in zip(b, self.v)]
        fine = tuple(fld.cum(shifted) for fld in fields)
        coarse_fields = self._field_set(max(self.quad_depth - 1, 1))
        coarse = tuple(fld.cum(shifted) for fld in coarse_fields)
        refine = max(abs(a - c) for a, c in zip(fine, coarse))
        value = tuple(max(f, c) for f, c in zip(fine, x))  # join with x
        return ContourResult(value, refine + 1e-12)


# ---------------------------------------------------------------------------
# axiom checking
# ---------------------------------------------------------------------------

@dataclass
class AxiomReport:
    """Outcome of sampling the contour axioms."""

    samples: int = 0
    worst_reflexivity: float = 0.0   # x <= C(x, eps)
    worst_lax: float = 0.0           # C(C(x, eps), tau) <= C(x, eps + tau)
    worst_monotone: float = 0.0      # C monotone in both arguments
    failures: list = field(default_factory=list)

    @property
    def worst_violation(self) -> float:
        return max(self.worst_reflexivity, self.worst_lax, self.worst_monotone)

    @property
    def passed(self) -> bool:
        return not self.failures


def _violation(a, b) -> float:
    """How far a <= b fails, componentwise; infinity absorbs."""
    if b is INFINITY:
        return 0.0
    if a is INFINITY:
        return math.inf
    return max(max(ac - bc for ac, bc in zip(a, b)), 0.0)


def check_contour_axioms(contour: Contour, samples, tol: float) -> AxiomReport:
    """Sample the two contour axioms plus monotonicity.

    samples yields (x, eps, tau) triples with finite x.  Monotonicity is
    probed against the derived larger input (x + tau * ones, eps + tau).
    Returns the worst violations; a sample fails when it exceeds tol.
    """
    report = AxiomReport()
    for x, eps, tau in samples:
        report.samples += 1
        c1 = contour.evaluate(x, eps).value
        v1 = _violation(tuple(x), c1)

        c2 = contour.evaluate(c1, tau).value if c1 is not INFINITY else INFINITY
        c3 = contour.evaluate(x, eps + tau).value
        v2 = _violation(c2, c3)

        x_up = tuple(c + tau for c in x)
        try:
            c4 = contour.evaluate(x_up, eps + tau).value
            v3 = _violation(c1, c4)
        except ValueError:
            v3 = 0.0  # derived point left the contour's domain (curve family)

        report.worst_reflexivity = max(report.worst_reflexivity, v1)
        report.worst_lax = max(report.worst_lax, v2)
        report.worst_monotone = max(report.worst_monotone, v3)
        if max(v1, v2, v3) > tol:
            report.failures.append(
                {"x": tuple(x), "eps": eps, "tau": tau,
                 "violation": max(v1, v2, v3)}
            )
    return report
