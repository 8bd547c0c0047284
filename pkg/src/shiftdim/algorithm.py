"""Shift-dimension of bivariate interval modules in linear time.

The key computation: given an interval module M with sorted generator
staircase g_1, ..., g_n (first coordinates increasing, second decreasing)
and a direction v >= 0, cluster the generators greedily.  Each round picks

    i_k = max { i in I_k : deg(g_i) <= deg(g_j) + v
                for every live j in I_k with j < i }

("live" means the v-shift of g_j is nonzero, i.e. g_j + v stays inside the
support), then discards every i with deg(g_{i_k}) <= deg(g_i) + v, whose
shifted generator the chosen element divides.  The chosen generators form a
minimum-cardinality set whose span contains v * M, so their count is the
shift-dimension.  Running the same loop on the coordinate-swapped module
gives the variant that clusters in the opposite total order.

The loop touches each generator O(1) times amortized for fixed v and box;
the hot path runs on integer-scaled numpy arrays, with an exact pure-Python
fallback for coordinates that do not fit machine integers.

`stable_rank_curve` turns tau -> dim_{tau v}(M) into an exact step function
by locating every tau where either a shifted generator leaves the support
or a divisibility between a generator and a shifted generator flips.

`subset_oracle` is the independent brute force: it enumerates subsets of
the generator staircase by increasing cardinality and is valid in any
number of parameters (a minimal-generator v-basis always exists for
interval modules).  It is exponential and meant for cross-checking.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Literal

import numpy as np

from .degrees import Degree, common_scale
from .errors import ComputationRefused, InternalInvariantError
from .intervals import IntervalModule
from .stepfun import StepFunction

Order = Literal["from_above", "from_below"]

_INT64_GUARD = 1 << 60


@dataclass(frozen=True)
class ShiftDimResult:
    """Outcome of a shift-dimension computation.

    dimension equals ``len(basis)``; every basis degree is a minimal
    generator of the input module.  ``iterations`` counts clustering rounds
    (for the 2D algorithm) or tested subsets (for the subset oracle).
    """

    dimension: int
    basis: tuple[Degree, ...]
    iterations: int

    def __post_init__(self):
        if self.dimension != len(self.basis):
            raise InternalInvariantError("dimension must equal the basis size")


def _validate_direction(v: Degree, r: int) -> None:
    if v.r != r:
        raise ValueError(f"direction has dimension {v.r}, module has {r}")
    # Degree already enforces coordinates >= 0.


def _int_pairs(points, scale: int) -> list[tuple[int, int]]:
    out = []
    for p in points:
        c0, c1 = p.coords
        out.append((int(c0 * scale), int(c1 * scale)))
    return out


def _liveness_int(a, b, rels, v1: int, v2: int) -> list[bool]:
    # g_i + v is dead iff some relation (ra, rb) satisfies ra <= a_i + v1
    # and rb <= b_i + v2.
    n = len(a)
    if not rels:
        return [True] * n
    live = [True] * n
    for i in range(n):
        qa, qb = a[i] + v1, b[i] + v2
        for ra, rb in rels:
            if ra <= qa and rb <= qb:
                live[i] = False
                break
    return live


def _cluster_py(a, b, live, v1, v2) -> list[int]:
    """Reference clustering loop on plain Python integers (exact)."""
    n = len(a)
    lives = [i for i in range(n) if live[i]]
    prev_live = [-1] * n
    last = -1
    for i in range(n):
        prev_live[i] = last
        if live[i]:
            last = i
    chosen: list[int] = []
    ptr = 0
    while ptr < len(lives):
        j0 = lives[ptr]
        amax = a[j0] + v1
        ik = j0
        i = j0 + 1
        while i < n and a[i] <= amax:
            if b[i] <= b[prev_live[i]] + v2:
                ik = i
            i += 1
        chosen.append(ik)
        thr = b[ik] - v2
        # b is strictly decreasing: indices with b >= thr form a prefix
        lo, hi = 0, n - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if b[mid] >= thr:
                lo = mid
            else:
                hi = mid - 1
        last_removed = lo if b[lo] >= thr else -1
        while ptr < len(lives) and lives[ptr] <= last_removed:
            ptr += 1
    return chosen


def _cluster_np(a, b, live_idx, prev_live_b, v1, v2, all_live: bool) -> list[int]:
    """Vectorized clustering loop on int64 arrays.

    When every generator is live, the order constraint inside the window is
    automatic (b is strictly decreasing), so the chosen index is simply the
    window's right edge and each round costs O(log n).
    """
    neg_b = -b  # ascending, for prefix searches
    chosen: list[int] = []
    ptr = 0
    nlive = live_idx.shape[0]
    while ptr < nlive:
        j0 = int(live_idx[ptr])
        amax = a[j0] + v1
        e = int(np.searchsorted(a, amax, side="right"))
        if all_live:
            ik = e - 1
        else:
            ik = j0
            if e > j0 + 1:
                hits = np.flatnonzero(b[j0 + 1 : e] <= prev_live_b[j0 + 1 : e] + v2)
                if hits.size:
                    ik = j0 + 1 + int(hits[-1])
        chosen.append(ik)
        thr = b[ik] - v2
        last_removed = int(np.searchsorted(neg_b, -thr, side="right")) - 1
        ptr = int(np.searchsorted(live_idx, last_removed, side="right"))
    return chosen


def _staircase_ints(stair):
    """Integer coordinate lists for a bivariate staircase, memoized."""
    cache = stair._cache
    got = cache.get("ints")
    if got is None:
        scale = common_scale(stair)
        a = [int(g.coords[0] * scale) for g in stair]
        b = [int(g.coords[1] * scale) for g in stair]
        bound = max(a[-1:] + b[:1] + [1])
        use_np = bound < _INT64_GUARD and len(a) >= 64
        an = np.asarray(a, dtype=np.int64) if use_np else None
        bn = np.asarray(b, dtype=np.int64) if use_np else None
        prev_bn = (
            np.concatenate((bn[:1], bn[:-1])) if use_np else None
        )  # index 0 is never read
        got = (scale, a, b, an, bn, prev_bn)
        cache["ints"] = got
    return got


def _run_clustering(gens, rels, v: Degree):
    """Shared driver: scale to integers, pick a backend, cluster.

    Returns the chosen indices into the sorted generator staircase.
    """
    g_scale, a0, b0, an0, bn0, prev0 = _staircase_ints(gens)
    scale = common_scale(list(rels) + [v])
    scale = g_scale * scale // math.gcd(g_scale, scale)
    factor = scale // g_scale
    v1, v2 = int(v.coords[0] * scale), int(v.coords[1] * scale)
    relpairs = _int_pairs(rels, scale)

    bound = max(
        [abs(x) * factor for x in a0[-1:] + b0[:1]]
        + [abs(x) for pair in relpairs for x in pair]
        + [v1, v2, 1]
    )
    use_np = an0 is not None and bound < _INT64_GUARD
    if use_np:
        an = an0 * factor if factor != 1 else an0
        bn = bn0 * factor if factor != 1 else bn0
        if relpairs:
            qa, qb = an + v1, bn + v2
            dead = np.zeros(an.shape[0], dtype=bool)
            for ra, rb in relpairs:
                dead |= (qa >= ra) & (qb >= rb)
            live = ~dead
            live_idx = np.flatnonzero(live)
            if live_idx.size == 0:
                return []
            positions = np.where(live, np.arange(an.shape[0]), -1)
            prev_live = np.concatenate(([-1], np.maximum.accumulate(positions)[:-1]))
            prev_live_b = bn[np.maximum(prev_live, 0)]  # index <= j0 never read
            return _cluster_np(an, bn, live_idx, prev_live_b, v1, v2, all_live=False)
        live_idx = _full_range(an.shape[0])
        prev_live_b = prev0 * factor if factor != 1 else prev0
        return _cluster_np(an, bn, live_idx, prev_live_b, v1, v2, all_live=True)

    a = [x * factor for x in a0]
    b = [x * factor for x in b0]
    live = _liveness_int(a, b, relpairs, v1, v2)
    if not any(live):
        return []
    return _cluster_py(a, b, live, v1, v2)


_RANGE_CACHE: dict[int, np.ndarray] = {}


def _full_range(n: int) -> np.ndarray:
    got = _RANGE_CACHE.get(n)
    if got is None:
        if len(_RANGE_CACHE) > 32:
            _RANGE_CACHE.clear()
        got = np.arange(n, dtype=np.int64)
        _RANGE_CACHE[n] = got
    return got


def shift_dimension_2d(
    module: IntervalModule, v: Degree, order: Order = "from_above"
) -> ShiftDimResult:
    """Shift-dimension of a bivariate interval module, with a witness basis.

    Parameters
    ----------
    module : bivariate interval module.
    v : direction, componentwise >= 0.  The zero direction returns the
        minimal number of generators with the full staircase as basis.
    order : "from_above" clusters in the staircase order (top-left first);
        "from_below" uses the opposite total order.

    Returns
    -------
    ShiftDimResult with the dimension, a v-basis consisting of minimal
    generators, and the number of clustering rounds.
    """
    if module.is_zero():
        return ShiftDimResult(0, (), 0)
    if module.r != 2:
        raise ComputationRefused(
            f"the clustering algorithm handles r = 2 only (module has r = {module.r}); "
            "use subset_oracle or the grid oracle"
        )
    _validate_direction(v, 2)
    if order not in ("from_above", "from_below"):
        raise ValueError(f"unknown order {order!r}")

    gens = module.generators
    if v.is_zero():
        return ShiftDimResult(len(gens), tuple(gens), 0)

    if order == "from_below":
        swap = lambda d: Degree(d.coords[1], d.coords[0])  # noqa: E731
        flipped = IntervalModule(
            [swap(g) for g in gens], [swap(rel) for rel in module.relations]
        )
        result = shift_dimension_2d(flipped, swap(v), "from_above")
        return ShiftDimResult(
            result.dimension, tuple(swap(g) for g in result.basis), result.iterations
        )

    chosen = _run_clustering(module.generators, module.relations, v)
    basis = tuple(gens[i] for i in chosen)
    return ShiftDimResult(len(basis), basis, len(chosen))


def critical_taus(module: IntervalModule, v: Degree) -> list[Fraction]:
    """Every tau >= 0 where dim_{tau v}(M) can change, sorted, 0 included.

    Two event kinds: a shifted generator entering a relation upset (its
    shift becomes zero), and a generator starting to divide another
    generator's shift.  Between consecutive events nothing the clustering
    inspects can flip, so the stable-rank curve is constant there.
    """
    if v.is_zero():
        raise ValueError("critical taus need a nonzero direction")
    _validate_direction(v, module.r)
    taus = {Fraction(0)}
    gens = list(module.generators)
    pos = [c for c in range(v.r) if v.coords[c] > 0]

    def first_domination(target: Degree, base: Degree):
        """Smallest tau with base + tau*v >= target, or None."""
        for c in range(v.r):
            if v.coords[c] == 0 and base.coords[c] < target.coords[c]:
                return None
        tau = max(
            (target.coords[c] - base.coords[c]) / v.coords[c] for c in pos
        )
        return tau if tau >= 0 else None

    for g in gens:
        for rel in module.relations:
            tau = first_domination(rel, g)
            if tau is not None:
                taus.add(tau)
    for gi in gens:
        for gj in gens:
            if gi is gj:
                continue
            tau = first_domination(gi, gj)
            if tau is not None:
                taus.add(tau)
    return sorted(taus)


def stable_rank_curve(module: IntervalModule, v: Degree) -> StepFunction:
    """The step function tau -> dim_{tau v}(M), exact.

    Evaluates the clustering algorithm at every critical tau and verifies
    constancy at segment midpoints; the final value persists on the
    unbounded tail (it is 0 exactly when the support dies in direction v).
    """
    if module.is_zero():
        return StepFunction.constant(0)
    taus = critical_taus(module, v)

    def dim_at(tau: Fraction) -> int:
        return shift_dimension_2d(module, v.scale(tau)).dimension

    values = [dim_at(t) for t in taus]
    for k in range(len(taus)):
        probe = (taus[k] + taus[k + 1]) / 2 if k + 1 < len(taus) else taus[k] + 1
        if dim_at(probe) != values[k]:
            raise InternalInvariantError(
                f"curve not constant on segment starting at tau={taus[k]}"
            )
    return StepFunction(taus, values)


def subset_oracle(module: IntervalModule, v: Degree) -> ShiftDimResult:
    """Brute-force shift-dimension for interval modules in any dimension.

    Enumerates subsets of the generator staircase by increasing cardinality
    and accepts the first one that divides every nonzero shifted generator.
    Exponential in the number of generators; intended as an oracle.
    """
    if module.is_zero():
        return ShiftDimResult(0, (), 0)
    _validate_direction(v, module.r)
    gens = list(module.generators)
    if len(gens) > 18:
        warnings.warn(
            f"subset_oracle on {len(gens)} generators is exponential", stacklevel=2
        )
    targets = [
        g + v for g in gens if not module.relations.dominates(g + v)
    ]
    tested = 0
    if not targets:
        return ShiftDimResult(0, (), 0)
    for k in range(1, len(gens) + 1):
        for subset in combinations(gens, k):
            tested += 1
            if all(any(s <= t for s in subset) for t in targets):
                return ShiftDimResult(k, subset, tested)
    raise InternalInvariantError("the full generator set always v-generates")
