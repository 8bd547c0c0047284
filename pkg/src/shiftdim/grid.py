"""Finite-grid presentations of two-parameter modules over a prime field.

A `GridModule` is a commutative diagram of F_p vector spaces on a finite
integer lattice: fiber dimensions plus one structure matrix per horizontal
and vertical edge.  It stands for a finitely presented module on the whole
quadrant under two conventions: the module is zero below/left of the grid,
and constant (all outgoing maps isomorphisms) above/right of it.  Building
a grid with `grid_from_intervals` guarantees the second convention via a
margin of v plus one unit beyond every critical degree.

The shift-dimension search here is the brute-force oracle for the general,
NP-hard case.  It exploits one exact reduction: v * M is generated by the
v-shifts of any generating set of M, so a set S annihilates iff the shifted
generator vectors lie in <S> at the handful of degrees gen + v.  Candidate
elements are therefore summarized by their pushforwards into those degrees,
deduplicated, pruned by pointwise span domination, split into independent
components, and searched by iterative-deepening DFS.  Every witness found
is re-verified through the independent closure-based annihilation check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

from .degrees import Degree, common_scale
from .errors import ComputationRefused, InternalInvariantError
from .intervals import DirectSumModule, IntervalModule, summands_of, support_contains
from .stepfun import StepFunction

Matrix = tuple[tuple[int, ...], ...]  # rows; shape (target_dim, source_dim)
Point = tuple[int, int]


# ---------------------------------------------------------------------------
# dense F_p linear algebra on tuple vectors
# ---------------------------------------------------------------------------

def _inv_mod(a: int, p: int) -> int:
    return pow(a, p - 2, p)


def _apply(mat: Matrix, vec: tuple[int, ...], p: int) -> tuple[int, ...]:
    return tuple(sum(r * v for r, v in zip(row, vec)) % p for row in mat)


def _compose(after: Matrix, before: Matrix, p: int) -> Matrix:
    """Matrix of ``after ∘ before``."""
    if not after:
        return ()
    if not before:
        return tuple(() for _ in after)
    cols = len(before[0])
    rows = []
    for arow in after:
        rows.append(
            tuple(
                sum(arow[k] * before[k][j] for k in range(len(before))) % p
                for j in range(cols)
            )
        )
    return tuple(rows)


def _identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _zero_matrix(rows: int, cols: int) -> Matrix:
    return tuple(tuple(0 for _ in range(cols)) for _ in range(rows))


def _pivot(vec: tuple[int, ...]) -> int:
    for i, c in enumerate(vec):
        if c:
            return i
    return -1


def _reduce(rows: Sequence[tuple[int, ...]], vec: tuple[int, ...], p: int):
    """Reduce vec against echelon rows (sorted by pivot); result or zero."""
    v = list(vec)
    for row in rows:
        piv = _pivot(row)
        if piv >= 0 and v[piv]:
            c = v[piv]  # row has leading 1
            for j in range(piv, len(v)):
                v[j] = (v[j] - c * row[j]) % p
    return tuple(v)


def _insert(rows: tuple, vec: tuple[int, ...], p: int) -> tuple:
    """Insert an already-reduced nonzero vector, keeping echelon order."""
    piv = _pivot(vec)
    lead = vec[piv]
    if lead != 1:
        inv = _inv_mod(lead, p)
        vec = tuple((c * inv) % p for c in vec)
    out = list(rows)
    at = sum(1 for row in out if _pivot(row) < piv)
    out.insert(at, vec)
    return tuple(out)


def span_basis(vectors: Iterable[tuple[int, ...]], p: int) -> tuple:
    """Reduced echelon basis of the span of the given vectors (canonical)."""
    rows: tuple = ()
    for vec in vectors:
        red = _reduce(rows, vec, p)
        if any(red):
            rows = _insert(rows, red, p)
    # full reduction above pivots for canonical form
    final: list[tuple[int, ...]] = []
    for row in reversed(rows):
        final_t = tuple(final)
        red = _reduce(final_t, row, p)
        if any(red):
            final.append(red)
    final.sort(key=_pivot)
    return tuple(final)


def in_span(rows: tuple, vec: tuple[int, ...], p: int) -> bool:
    return not any(_reduce(rows, vec, p))


def _normalize_vector(vec: tuple[int, ...], p: int) -> tuple[int, ...]:
    piv = _pivot(vec)
    if piv < 0:
        raise ValueError("zero vector is not a homogeneous element")
    if vec[piv] == 1:
        return tuple(c % p for c in vec)
    inv = _inv_mod(vec[piv] % p, p)
    return tuple((c * inv) % p for c in vec)


def _normalized_vectors(dim: int, p: int):
    """All scalar-normalized nonzero vectors of F_p^dim, in lexicographic order."""
    for vec in product(range(p), repeat=dim):
        if any(vec) and vec[_pivot(vec)] == 1:
            yield vec


@dataclass(frozen=True)
class HomogeneousElement:
    """A nonzero homogeneous element: a degree plus a normalized fiber vector."""

    degree: Point
    vector: tuple[int, ...]

    @classmethod
    def make(cls, degree, vector, p: int) -> "HomogeneousElement":
        return cls((int(degree[0]), int(degree[1])), _normalize_vector(tuple(vector), p))


# ---------------------------------------------------------------------------
# the grid module
# ---------------------------------------------------------------------------

class GridModule:
    """Commutative diagram of F_p spaces on an integer lattice.

    Parameters
    ----------
    xs, ys : strictly increasing integer coordinates.
    dims : ``dims[i][j]`` is the fiber dimension at ``(xs[i], ys[j])``.
    hmaps, vmaps : matrices (rows = target basis) for the edges to the right
        and upward; keys are index pairs ``(i, j)``.  Edges may be omitted
        when either endpoint is zero-dimensional or when both fibers have
        equal dimension, in which case the identity is filled in.
    p : field characteristic (prime).

    Every lattice square must commute; violations raise ``ValueError``.
    """

    def __init__(self, xs, ys, dims, hmaps=None, vmaps=None, p: int = 2, scale: int = 1):
        self.xs = tuple(int(x) for x in xs)
        self.ys = tuple(int(y) for y in ys)
        if any(b <= a for a, b in zip(self.xs, self.xs[1:])):
            raise ValueError("xs must be strictly increasing")
        if any(b <= a for a, b in zip(self.ys, self.ys[1:])):
            raise ValueError("ys must be strictly increasing")
        if p < 2 or any(p % q == 0 for q in range(2, min(p, 40))):
            raise ValueError(f"p = {p} is not prime")
        self.p = p
        self.scale = scale  # lattice units per original coordinate unit
        self.nx, self.ny = len(self.xs), len(self.ys)
        self.dims = tuple(tuple(int(d) for d in col) for col in dims)
        if len(self.dims) != self.nx or any(len(col) != self.ny for col in self.dims):
            raise ValueError("dims must be an nx-by-ny table")
        self.hmaps = self._fill_maps(hmaps or {}, horizontal=True)
        self.vmaps = self._fill_maps(vmaps or {}, horizontal=False)
        self._check_commutativity()

    def dim(self, i: int, j: int) -> int:
        return self.dims[i][j]

    def _fill_maps(self, given: Mapping, horizontal: bool) -> dict:
        filled = {}
        imax = self.nx - 1 if horizontal else self.nx
        jmax = self.ny if horizontal else self.ny - 1
        for i in range(imax):
            for j in range(jmax):
                src = self.dims[i][j]
                tgt = self.dims[i + 1][j] if horizontal else self.dims[i][j + 1]
                key = (i, j)
                mat = given.get(key)
                if mat is None:
                    if src == 0 or tgt == 0:
                        mat = _zero_matrix(tgt, src)
                    elif src == tgt:
                        mat = _identity(src)
                    else:
                        raise ValueError(
                            f"{'horizontal' if horizontal else 'vertical'} map at index "
                            f"{key} has shape {tgt}x{src} and must be given explicitly"
                        )
                else:
                    mat = tuple(tuple(int(e) % self.p for e in row) for row in mat)
                    if len(mat) != tgt or any(len(row) != src for row in mat):
                        raise ValueError(
                            f"map at index {key} has wrong shape: expected {tgt}x{src}"
                        )
                if src and tgt:
                    filled[key] = mat
        return filled

    def hmap(self, i: int, j: int) -> Matrix:
        mat = self.hmaps.get((i, j))
        if mat is None:
            return _zero_matrix(self.dims[i + 1][j], self.dims[i][j])
        return mat

    def vmap(self, i: int, j: int) -> Matrix:
        mat = self.vmaps.get((i, j))
        if mat is None:
            return _zero_matrix(self.dims[i][j + 1], self.dims[i][j])
        return mat

    def _check_commutativity(self) -> None:
        for i in range(self.nx - 1):
            for j in range(self.ny - 1):
                src, tgt = self.dims[i][j], self.dims[i + 1][j + 1]
                if src == 0 or tgt == 0:
                    continue
                zero = _zero_matrix(tgt, src)
                up_right = (
                    _compose(self.hmap(i, j + 1), self.vmap(i, j), self.p)
                    if self.dims[i][j + 1]
                    else zero
                )
                right_up = (
                    _compose(self.vmap(i + 1, j), self.hmap(i, j), self.p)
                    if self.dims[i + 1][j]
                    else zero
                )
                if up_right != right_up:
                    raise ValueError(
                        f"square at index ({i}, {j}) does not commute"
                    )

    # -- coordinate helpers --------------------------------------------------

    def index_of(self, point: Point) -> tuple[int, int] | None:
        x, y = point
        try:
            return self.xs.index(x), self.ys.index(y)
        except ValueError:
            return None

    def path_map(self, src: tuple[int, int], dst: tuple[int, int]) -> Matrix:
        """Composite map between two lattice indices, src <= dst.

        All monotone paths agree by commutativity, so a zero fiber anywhere
        on one path forces the zero map.
        """
        (i, j), (k, l) = src, dst
        if k < i or l < j:
            raise ValueError("path_map needs src <= dst")
        d_src, d_dst = self.dims[i][j], self.dims[k][l]
        if d_src == 0 or d_dst == 0:
            return _zero_matrix(d_dst, d_src)
        mat = _identity(d_src)
        while i < k:
            if self.dims[i + 1][j] == 0:
                return _zero_matrix(d_dst, d_src)
            mat = _compose(self.hmap(i, j), mat, self.p)
            i += 1
        while j < l:
            if self.dims[i][j + 1] == 0:
                return _zero_matrix(d_dst, d_src)
            mat = _compose(self.vmap(i, j), mat, self.p)
            j += 1
        return mat

    def __repr__(self) -> str:
        total = sum(d for col in self.dims for d in col)
        return (
            f"GridModule({self.nx}x{self.ny} lattice, total fiber dim {total}, "
            f"p={self.p})"
        )


# ---------------------------------------------------------------------------
# construction from interval modules
# ---------------------------------------------------------------------------

def grid_from_intervals(
    module: IntervalModule | DirectSumModule, v: Degree, p: int = 2
) -> GridModule:
    """Discretize a (sum of) bivariate interval module(s) onto an integer grid.

    Rational coordinates are cleared by their common denominator (the same
    factor rescales v; it is recorded as ``scale`` on the result).  The grid
    covers every critical degree with a margin of v plus one lattice unit,
    so annihilation checks for shifts up to v are decided by the grid alone.
    """
    parts = summands_of(module)
    if any(m.r != 2 for m in parts if not m.is_zero()):
        raise ComputationRefused("grid discretization handles r = 2 only")
    criticals = [d for m in parts for d in list(m.generators) + list(m.relations)]
    if not criticals:
        return GridModule((0, 1), (0, 1), ((0, 0), (0, 0)), p=p, scale=1)
    scale = common_scale(criticals + [v])
    sx = [int(d.coords[0] * scale) for d in criticals]
    sy = [int(d.coords[1] * scale) for d in criticals]
    v1, v2 = int(v.coords[0] * scale), int(v.coords[1] * scale)
    lo_x, lo_y = min(sx), min(sy)
    hi_x, hi_y = max(sx) + v1 + 1, max(sy) + v2 + 1
    xs = range(lo_x, hi_x + 1)
    ys = range(lo_y, hi_y + 1)

    supports = []
    for m in parts:
        scaled = IntervalModule(
            [g.scale(scale) for g in m.generators],
            [rel.scale(scale) for rel in m.relations],
        )
        supports.append(scaled)

    def fiber_slots(x: int, y: int) -> list[int]:
        d = Degree(x, y)
        return [k for k, m in enumerate(supports) if not m.is_zero() and support_contains(m, d)]

    slot_table = [[fiber_slots(x, y) for y in ys] for x in xs]
    dims = tuple(tuple(len(slot_table[i][j]) for j in range(len(ys))) for i in range(len(xs)))

    def edge(src_slots, tgt_slots) -> Matrix:
        return tuple(
            tuple(1 if s == t else 0 for s in src_slots) for t in tgt_slots
        )

    hmaps, vmaps = {}, {}
    for i in range(len(xs) - 1):
        for j in range(len(ys)):
            if dims[i][j] and dims[i + 1][j]:
                hmaps[(i, j)] = edge(slot_table[i][j], slot_table[i + 1][j])
    for i in range(len(xs)):
        for j in range(len(ys) - 1):
            if dims[i][j] and dims[i][j + 1]:
                vmaps[(i, j)] = edge(slot_table[i][j], slot_table[i][j + 1])
    return GridModule(xs, ys, dims, hmaps, vmaps, p=p, scale=scale)


# ---------------------------------------------------------------------------
# generators, closure, annihilation
# ---------------------------------------------------------------------------

def _points_colex(module: GridModule):
    for j in range(module.ny):
        for i in range(module.nx):
            yield i, j


def generators_grid(module: GridModule) -> list[HomogeneousElement]:
    """A minimal homogeneous generating set: cokernel representatives of the
    incoming maps at every lattice point, in colexicographic order."""
    gens = []
    for i, j in _points_colex(module):
        d = module.dims[i][j]
        if d == 0:
            continue
        incoming = []
        if i > 0 and module.dims[i - 1][j]:
            mat = module.hmap(i - 1, j)
            incoming.extend(_apply(mat, unit, module.p) for unit in _identity(module.dims[i - 1][j]))
        if j > 0 and module.dims[i][j - 1]:
            mat = module.vmap(i, j - 1)
            incoming.extend(_apply(mat, unit, module.p) for unit in _identity(module.dims[i][j - 1]))
        rows = span_basis(incoming, module.p)
        for unit in _identity(d):
            red = _reduce(rows, unit, module.p)
            if any(red):
                rows = _insert(rows, red, module.p)
                gens.append(
                    HomogeneousElement((module.xs[i], module.ys[j]), tuple(unit))
                )
    return gens


def beta0_grid(module: GridModule) -> int:
    """Minimal number of homogeneous generators: total cokernel dimension."""
    return len(generators_grid(module))


def submodule_closure(
    module: GridModule, elements: Iterable[HomogeneousElement]
) -> dict[Point, tuple]:
    """Fiberwise echelon bases of the submodule generated by the elements.

    One sweep in increasing degree order suffices: the span at a point is
    generated by the seeds there plus the pushforwards from its two
    predecessors.
    """
    seeds: dict[tuple[int, int], list] = {}
    for el in elements:
        idx = module.index_of(el.degree)
        if idx is None:
            raise ValueError(f"element degree {el.degree} is not on the grid")
        if len(el.vector) != module.dims[idx[0]][idx[1]]:
            raise ValueError(f"element vector at {el.degree} has the wrong length")
        seeds.setdefault(idx, []).append(tuple(c % module.p for c in el.vector))
    spans: dict[tuple[int, int], tuple] = {}
    for j in range(module.ny):
        for i in range(module.nx):
            if module.dims[i][j] == 0:
                spans[(i, j)] = ()
                continue
            vecs = list(seeds.get((i, j), []))
            if i > 0 and spans[(i - 1, j)]:
                mat = module.hmap(i - 1, j)
                vecs.extend(_apply(mat, row, module.p) for row in spans[(i - 1, j)])
            if j > 0 and spans[(i, j - 1)]:
                mat = module.vmap(i, j - 1)
                vecs.extend(_apply(mat, row, module.p) for row in spans[(i, j - 1)])
            spans[(i, j)] = span_basis(vecs, module.p)
    return {
        (module.xs[i], module.ys[j]): spans[(i, j)]
        for i in range(module.nx)
        for j in range(module.ny)
    }


def _require_margin(module: GridModule, v: Degree) -> tuple[int, int]:
    v1, v2 = (int(c) for c in v.coords)
    if v.coords[0] != v1 or v.coords[1] != v2 or v1 < 0 or v2 < 0:
        raise ValueError(f"grid shifts need integer v >= 0, got {v!r}")
    if v1 > module.xs[-1] - module.xs[0] or v2 > module.ys[-1] - module.ys[0]:
        raise ComputationRefused(
            f"grid margin too small for shift ({v1}, {v2}); enlarge the grid"
        )
    return v1, v2


def is_v_annihilating(
    module: GridModule, elements: Iterable[HomogeneousElement], v: Degree
) -> bool:
    """Whether v * M lies inside the submodule generated by the elements.

    Checks, for every lattice point d with d + v on the lattice, that the
    image of the composite map M_d -> M_{d+v} is contained in the closure.
    Requires the stabilization margin; refuses when v exceeds the grid.
    """
    v1, v2 = _require_margin(module, v)
    closure = submodule_closure(module, elements)
    for i in range(module.nx):
        for j in range(module.ny):
            if module.dims[i][j] == 0:
                continue
            ti = i + v1  # unit lattice steps
            tj = j + v2
            if ti >= module.nx or tj >= module.ny:
                continue
            if module.dims[ti][tj] == 0:
                continue
            mat = module.path_map((i, j), (ti, tj))
            target_rows = closure[(module.xs[ti], module.ys[tj])]
            for unit in _identity(module.dims[i][j]):
                img = _apply(mat, unit, module.p)
                if any(img) and not in_span(target_rows, img, module.p):
                    return False
    return True


# ---------------------------------------------------------------------------
# brute-force shift-dimension
# ---------------------------------------------------------------------------

def _condition_points(module: GridModule, v1: int, v2: int):
    """Shifted generator targets: (lattice index, nonzero target vector)."""
    targets = []
    for gen in generators_grid(module):
        gi, gj = module.index_of(gen.degree)
        ti, tj = gi + v1, gj + v2
        if ti >= module.nx or tj >= module.ny:
            raise ComputationRefused(
                "grid margin too small: a shifted generator leaves the lattice"
            )
        if module.dims[ti][tj] == 0:
            continue
        vec = _apply(module.path_map((gi, gj), (ti, tj)), gen.vector, module.p)
        if any(vec):
            targets.append(((ti, tj), vec))
    return targets


@dataclass
class _Candidate:
    rank: int                     # enumeration order (colex degree, lex vector)
    degree: tuple[int, int]       # lattice index
    vector: tuple[int, ...]
    contribs: tuple               # per condition point: pushed vector or None


def _candidates(module: GridModule, targets) -> list[_Candidate]:
    p = module.p
    # Pushforward maps into each condition point, for all points below it.
    # All monotone paths agree (commutativity), so one passing through a
    # zero fiber forces the zero map.
    maps: list[dict] = []
    for (ti, tj), _vec in targets:
        table: dict[tuple[int, int], Matrix] = {}
        for i in range(ti, -1, -1):
            for j in range(tj, -1, -1):
                d = module.dims[i][j]
                if d == 0:
                    continue
                if i == ti and j == tj:
                    table[(i, j)] = _identity(d)
                elif i < ti and module.dims[i + 1][j]:
                    table[(i, j)] = _compose(table[(i + 1, j)], module.hmap(i, j), p)
                elif j < tj and module.dims[i][j + 1]:
                    table[(i, j)] = _compose(table[(i, j + 1)], module.vmap(i, j), p)
                else:
                    table[(i, j)] = _zero_matrix(module.dims[ti][tj], d)
        maps.append(table)

    raw: list[_Candidate] = []
    rank = 0
    for i, j in _points_colex(module):
        d = module.dims[i][j]
        if d == 0:
            continue
        if not any((i, j) in table for table in maps):
            continue
        push = [table.get((i, j)) for table in maps]
        for vec in _normalized_vectors(d, p):
            contribs = tuple(
                _apply(mat, vec, p) if mat is not None else None for mat in push
            )
            if any(c is not None and any(c) for c in contribs):
                raw.append(_Candidate(rank, (i, j), vec, contribs))
            rank += 1

    # deduplicate by contribution profile (keep lowest enumeration rank)
    seen: dict[tuple, _Candidate] = {}
    for cand in raw:
        key = tuple(
            tuple(c) if c is not None and any(c) else None for c in cand.contribs
        )
        if key not in seen:
            seen[key] = cand
    cands = list(seen.values())

    # pointwise span domination: drop c' when some c covers it everywhere
    def dominates(c: _Candidate, c2: _Candidate) -> bool:
        for a, b in zip(c.contribs, c2.contribs):
            bz = b is None or not any(b)
            if bz:
                continue
            az = a is None or not any(a)
            if az:
                return False
            # b must be a scalar multiple of a
            lam = None
            for x, y in zip(a, b):
                if x == 0 and y == 0:
                    continue
                if x == 0 or y == 0:
                    return False
                q = (y * _inv_mod(x, p)) % p
                if lam is None:
                    lam = q
                elif q != lam:
                    return False
        return True

    kept = []
    for c2 in cands:
        drop = False
        for c in cands:
            if c is c2:
                continue
            if dominates(c, c2) and not (dominates(c2, c) and c.rank > c2.rank):
                drop = True
                break
        if not drop:
            kept.append(c2)
    kept.sort(key=lambda c: c.rank)
    return kept


def _search_component(targets, cands, p: int, budget: int):
    """Smallest subset of cands spanning every target, or None within budget."""
    m = len(targets)

    def helpers(spans, chosen_set):
        """For each unsatisfied point: candidates that enlarge its span."""
        out = []
        for idx in range(m):
            if in_span(spans[idx], targets[idx][1], p):
                continue
            hs = [
                c
                for c in cands
                if c.rank not in chosen_set
                and c.contribs[idx] is not None
                and any(c.contribs[idx])
                and not in_span(spans[idx], c.contribs[idx], p)
            ]
            out.append((idx, hs))
        return out

    def dfs(spans, chosen, remaining, seen):
        todo = helpers(spans, chosen)
        if not todo:
            return []
        if remaining == 0:
            return None
        # fail-first: branch on the point with fewest helpers
        idx, hs = min(todo, key=lambda t: len(t[1]))
        if not hs:
            return None
        for cand in hs:
            key = frozenset(chosen | {cand.rank})
            if key in seen:
                continue
            seen.add(key)
            new_spans = list(spans)
            for k in range(m):
                contrib = cand.contribs[k]
                if contrib is None or not any(contrib):
                    continue
                red = _reduce(new_spans[k], contrib, p)
                if any(red):
                    new_spans[k] = _insert(new_spans[k], red, p)
            found = dfs(new_spans, chosen | {cand.rank}, remaining - 1, seen)
            if found is not None:
                return [cand] + found
        return None

    empty = [() for _ in range(m)]
    for k in range(0, min(budget, m) + 1):
        found = dfs(empty, frozenset(), k, set())
        if found is not None:
            return found
    return None


def bruteforce_v_basis(
    module: GridModule, v: Degree, cap: int = 16
) -> tuple[int, list[HomogeneousElement]] | None:
    """Exhaustive minimal v-generating set, or None when cap is exceeded.

    Returns the shift-dimension together with a witness basis.  The witness
    is re-verified with the closure-based annihilation check.
    """
    v1, v2 = _require_margin(module, v)
    if v1 == 0 and v2 == 0:
        gens = generators_grid(module)
        return len(gens), gens
    targets = _condition_points(module, v1, v2)
    if not targets:
        return 0, []
    cands = _candidates(module, targets)

    # split into independent components (no candidate touches both sides)
    comp_of: dict[int, int] = {}
    parent = list(range(len(targets)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for cand in cands:
        touched = [
            k for k, c in enumerate(cand.contribs) if c is not None and any(c)
        ]
        for k in touched[1:]:
            ra, rb = find(touched[0]), find(k)
            if ra != rb:
                parent[rb] = ra
    groups: dict[int, list[int]] = {}
    for k in range(len(targets)):
        groups.setdefault(find(k), []).append(k)

    total = 0
    witness: list[HomogeneousElement] = []
    for members in groups.values():
        sub_targets = [targets[k] for k in members]
        sub_cands = [
            _Candidate(
                c.rank,
                c.degree,
                c.vector,
                tuple(c.contribs[k] for k in members),
            )
            for c in cands
            if any(
                c.contribs[k] is not None and any(c.contribs[k]) for k in members
            )
        ]
        remaining = cap - total
        if remaining < 0:
            return None
        found = _search_component(sub_targets, sub_cands, module.p, remaining)
        if found is None:
            return None
        total += len(found)
        for cand in found:
            i, j = cand.degree
            witness.append(
                HomogeneousElement((module.xs[i], module.ys[j]), cand.vector)
            )
    if total > cap:
        return None
    if not is_v_annihilating(module, witness, v):
        raise InternalInvariantError(
            "search produced a witness the closure check rejects"
        )
    return total, witness


def shift_dimension_bruteforce(module: GridModule, v: Degree, cap: int = 16) -> int | None:
    """Shift-dimension by exhaustive search; None means the cap was exceeded."""
    result = bruteforce_v_basis(module, v, cap)
    return None if result is None else result[0]


# ---------------------------------------------------------------------------
# stable-rank curve through the oracle
# ---------------------------------------------------------------------------

def stable_rank_curve_grid(
    module: GridModule, v: Degree, cap: int = 16, workers: int = 1
) -> StepFunction:
    """tau -> dim_{floor(tau v)}(M) as an exact step function.

    For a module that is constant on unit lattice cells this equals the
    stable rank of the underlying continuous module in direction v / scale.
    Uses the brute-force oracle at every tau where floor(tau v) changes;
    stops at the lattice margin, assuming the boundary has stabilized.
    Evaluations at distinct tau are independent; workers > 1 runs them in a
    thread pool (the result does not depend on scheduling).
    """
    v1, v2 = _require_margin(module, v)
    if v1 == 0 and v2 == 0:
        raise ValueError("curve needs a nonzero direction")
    gens = generators_grid(module)
    if not gens:
        return StepFunction.constant(0)
    max_gx = max(module.xs.index(g.degree[0]) for g in gens)
    max_gy = max(module.ys.index(g.degree[1]) for g in gens)
    w1_limit = module.nx - 1 - max_gx
    w2_limit = module.ny - 1 - max_gy

    ladder = {Fraction(0)}
    if v1:
        ladder.update(Fraction(k, v1) for k in range(1, w1_limit + 1))
    if v2:
        ladder.update(Fraction(k, v2) for k in range(1, w2_limit + 1))

    steps = []  # (tau, shift) at each change of floor(tau * v)
    last_w = None
    for tau in sorted(ladder):
        w = (math.floor(tau * v1), math.floor(tau * v2))
        if w[0] > w1_limit or w[1] > w2_limit:
            break
        if w == last_w:
            continue
        last_w = w
        steps.append((tau, w))

    def eval_at(w) -> int:
        dim = shift_dimension_bruteforce(module, Degree(*w), cap)
        if dim is None:
            raise ComputationRefused(
                f"oracle cap {cap} exceeded while evaluating the curve at shift {w}"
            )
        return dim

    taus, values = [], []
    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=workers) as pool:
            dims = list(pool.map(eval_at, [w for _, w in steps]))
        for (tau, _w), dim in zip(steps, dims):
            taus.append(tau)
            values.append(dim)
            if dim == 0:
                break
    else:
        for tau, w in steps:
            dim = eval_at(w)
            taus.append(tau)
            values.append(dim)
            if dim == 0:
                break
    return StepFunction(taus, values)


# ---------------------------------------------------------------------------
# lattice surgery: resampling, scaling, direct sums
# ---------------------------------------------------------------------------

def resample_grid(module: GridModule, xs, ys) -> GridModule:
    """Transport the module onto another integer lattice.

    New points take the fiber of the nearest stored point below them (zero
    when there is none); edges compose the original maps.  Sound when the
    module is constant on lattice cells and beyond the stored boundary.
    """
    xs, ys = tuple(int(x) for x in xs), tuple(int(y) for y in ys)

    def floor_index(coords: tuple[int, ...], value: int) -> int | None:
        lo, hi = 0, len(coords) - 1
        if value < coords[0]:
            return None
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if coords[mid] <= value:
                lo = mid
            else:
                hi = mid - 1
        return lo

    fx = [floor_index(module.xs, x) for x in xs]
    fy = [floor_index(module.ys, y) for y in ys]

    def fiber(i: int, j: int) -> int:
        if fx[i] is None or fy[j] is None:
            return 0
        return module.dims[fx[i]][fy[j]]

    dims = tuple(tuple(fiber(i, j) for j in range(len(ys))) for i in range(len(xs)))
    hmaps, vmaps = {}, {}
    for i in range(len(xs) - 1):
        for j in range(len(ys)):
            if dims[i][j] and dims[i + 1][j]:
                hmaps[(i, j)] = module.path_map((fx[i], fy[j]), (fx[i + 1], fy[j]))
    for i in range(len(xs)):
        for j in range(len(ys) - 1):
            if dims[i][j] and dims[i][j + 1]:
                vmaps[(i, j)] = module.path_map((fx[i], fy[j]), (fx[i], fy[j + 1]))
    return GridModule(xs, ys, dims, hmaps, vmaps, p=module.p, scale=module.scale)


def scale_grid(module: GridModule, factor: int, pad: tuple[int, int] = (0, 0)) -> GridModule:
    """Stretch the lattice by an integer factor (poset isomorphism x -> f*x),
    optionally padding the upper boundary by extra unit rows/columns."""
    if factor < 1:
        raise ValueError("scale factor must be a positive integer")
    xs = range(module.xs[0] * factor, module.xs[-1] * factor + pad[0] + 1)
    ys = range(module.ys[0] * factor, module.ys[-1] * factor + pad[1] + 1)
    # the original lattice with coordinates multiplied out, then refined
    base = GridModule(
        tuple(x * factor for x in module.xs),
        tuple(y * factor for y in module.ys),
        module.dims,
        module.hmaps,
        module.vmaps,
        p=module.p,
        scale=module.scale * factor,
    )
    return resample_grid(base, xs, ys)


def direct_sum_grids(a: GridModule, b: GridModule) -> GridModule:
    """Block direct sum on the union lattice (same characteristic required)."""
    if a.p != b.p:
        raise ValueError("direct sum needs a common field characteristic")
    xs = range(min(a.xs[0], b.xs[0]), max(a.xs[-1], b.xs[-1]) + 1)
    ys = range(min(a.ys[0], b.ys[0]), max(a.ys[-1], b.ys[-1]) + 1)
    ra = resample_grid(a, xs, ys)
    rb = resample_grid(b, xs, ys)

    def block(m1: Matrix, m2: Matrix, rows1, cols1, rows2, cols2) -> Matrix:
        out = []
        for r in range(rows1):
            row = tuple(m1[r]) if rows1 else ()
            out.append(row + tuple(0 for _ in range(cols2)))
        for r in range(rows2):
            out.append(tuple(0 for _ in range(cols1)) + tuple(m2[r]))
        return tuple(out)

    nx, ny = len(ra.xs), len(ra.ys)
    dims = tuple(
        tuple(ra.dims[i][j] + rb.dims[i][j] for j in range(ny)) for i in range(nx)
    )
    hmaps, vmaps = {}, {}
    for i in range(nx - 1):
        for j in range(ny):
            if dims[i][j] and dims[i + 1][j]:
                hmaps[(i, j)] = block(
                    ra.hmap(i, j), rb.hmap(i, j),
                    ra.dims[i + 1][j], ra.dims[i][j],
                    rb.dims[i + 1][j], rb.dims[i][j],
                )
    for i in range(nx):
        for j in range(ny - 1):
            if dims[i][j] and dims[i][j + 1]:
                vmaps[(i, j)] = block(
                    ra.vmap(i, j), rb.vmap(i, j),
                    ra.dims[i][j + 1], ra.dims[i][j],
                    rb.dims[i][j + 1], rb.dims[i][j],
                )
    return GridModule(xs, ys, dims, hmaps, vmaps, p=a.p, scale=a.scale)
