"""Interval modules as quotients of two monomial ideals.

An interval module is stored by two finite staircases: the antichain of
minimal generator degrees and the antichain of minimal relation degrees.
Its support is ``upset(generators) \\ upset(relations)``.  Constructors
normalize: staircases are reduced to minimal antichains, sorted (for r = 2
by first coordinate increasing, second decreasing), generators swallowed
by a relation are dropped, and relations are re-expressed inside the
generator ideal so that the quotient is well formed.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .degrees import Degree, DimensionMismatch, join


class MalformedModule(ValueError):
    """Raised for presentations that do not describe a quotient of ideals."""


def minimal_antichain(points: Iterable[Degree]) -> list[Degree]:
    """Minimal elements of a finite set of degrees, without duplicates."""
    unique = list(dict.fromkeys(points))
    if unique and unique[0].r == 2:
        # plane sweep: after sorting by (a, b), a point is minimal iff its
        # second coordinate undercuts everything kept so far
        unique.sort(key=lambda d: d.coords)
        keep = []
        best_b = None
        for p in unique:
            if best_b is None or p.coords[1] < best_b:
                keep.append(p)
                best_b = p.coords[1]
        return keep
    keep = []
    for p in unique:
        if not any(q != p and q <= p for q in unique):
            keep.append(p)
    return keep


def sort_staircase(points: Sequence[Degree]) -> list[Degree]:
    """Canonical order: for r = 2 first coordinate increasing (hence second
    decreasing on an antichain); lexicographic for other dimensions."""
    return sorted(points, key=lambda d: d.coords)


class Staircase:
    """A finite antichain of degrees, stored sorted."""

    __slots__ = ("points", "_cache")

    def __init__(self, points: Iterable[Degree] = ()):
        pts = sort_staircase(minimal_antichain(points))
        dims = {p.r for p in pts}
        if len(dims) > 1:
            raise DimensionMismatch(f"mixed dimensions in staircase: {sorted(dims)}")
        object.__setattr__(self, "points", tuple(pts))
        object.__setattr__(self, "_cache", {})  # internal memo, not state

    def __setattr__(self, name, value):
        raise AttributeError("Staircase is immutable")

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, Staircase) and self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def dominates(self, d: Degree) -> bool:
        """True iff d lies in the upset of this staircase."""
        return any(p <= d for p in self.points)

    def __repr__(self) -> str:
        return f"Staircase({list(self.points)!r})"


class IntervalModule:
    """Quotient of two monomial ideals, presented by generator and relation
    staircases.

    The zero module is the empty presentation.  A free rank-one module is a
    single generator with no relations.

    Raises
    ------
    MalformedModule
        If a relation lies below every generator (the relation ideal would
        not be contained in the generator ideal).
    """

    __slots__ = ("generators", "relations")

    def __init__(self, generators: Iterable[Degree], relations: Iterable[Degree] = ()):
        gens = Staircase(generators)
        rels = Staircase(relations)
        if len(gens) and len(rels) and gens[0].r != rels[0].r:
            raise DimensionMismatch("generators and relations differ in dimension")
        for rel in rels:
            if not gens.dominates(rel):
                raise MalformedModule(
                    f"relation {rel!r} is not above any generator; "
                    "the quotient ideal would not be contained in the generator ideal"
                )
        # Generators swallowed by a relation present the zero class: drop them
        # and push every relation into the surviving generator ideal via joins.
        live = [g for g in gens if not rels.dominates(g)]
        if len(live) != len(gens):
            if not live:
                gens, rels = Staircase(), Staircase()
            else:
                gens = Staircase(live)
                rels = Staircase(join(rel, g) for rel in rels for g in live)
        if not len(gens):
            rels = Staircase()
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relations", rels)

    def __setattr__(self, name, value):
        raise AttributeError("IntervalModule is immutable")

    @property
    def r(self) -> int:
        if len(self.generators):
            return self.generators[0].r
        if len(self.relations):
            return self.relations[0].r
        return 0

    def is_zero(self) -> bool:
        return len(self.generators) == 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntervalModule)
            and self.generators == other.generators
            and self.relations == other.relations
        )

    def __hash__(self) -> int:
        return hash((self.generators, self.relations))

    def __repr__(self) -> str:
        return f"IntervalModule(gens={list(self.generators)!r}, rels={list(self.relations)!r})"


class DirectSumModule:
    """A finite direct sum of interval modules of equal dimension."""

    __slots__ = ("summands",)

    def __init__(self, summands: Iterable[IntervalModule]):
        parts = tuple(summands)
        dims = {m.r for m in parts if not m.is_zero()}
        if len(dims) > 1:
            raise DimensionMismatch(f"summands of mixed dimension: {sorted(dims)}")
        object.__setattr__(self, "summands", parts)

    def __setattr__(self, name, value):
        raise AttributeError("DirectSumModule is immutable")

    @property
    def r(self) -> int:
        for m in self.summands:
            if not m.is_zero():
                return m.r
        return 0

    def __repr__(self) -> str:
        return f"DirectSumModule({list(self.summands)!r})"


def support_contains(module: IntervalModule, d: Degree) -> bool:
    """True iff d carries a nonzero fiber: some generator <= d, no relation <= d."""
    if module.is_zero():
        return False
    if d.r != module.r:
        raise DimensionMismatch(f"probe degree has dimension {d.r}, module has {module.r}")
    return module.generators.dominates(d) and not module.relations.dominates(d)


def shift_is_nonzero(module: IntervalModule, g: Degree, v: Degree) -> bool:
    """Whether the v-shift of the generator g survives in the module.

    g must be one of the minimal generators; the shift is nonzero exactly
    when g + v still lies in the support.
    """
    if g not in module.generators.points:
        raise ValueError(f"{g!r} is not a generator of the module")
    return support_contains(module, g + v)


def truncate(module: IntervalModule, alpha: Degree) -> IntervalModule:
    """Quotient away everything above alpha.

    The result has support ``support(module) \\ upset(alpha)``.  Implemented
    by adjoining ``join(alpha, g)`` for every generator g, which keeps the
    relation ideal inside the generator ideal; the constructor re-minimizes
    and drops generators that end up above alpha.
    """
    if module.is_zero():
        return module
    if alpha.r != module.r:
        raise DimensionMismatch(f"alpha has dimension {alpha.r}, module has {module.r}")
    extra = [join(alpha, g) for g in module.generators]
    return IntervalModule(module.generators, list(module.relations) + extra)


def quotient_by_generator(module: IntervalModule, g: Degree) -> IntervalModule:
    """The quotient M / <g> for a minimal generator g (g joins the relations)."""
    if g not in module.generators.points:
        raise ValueError(f"{g!r} is not a generator of the module")
    return IntervalModule(module.generators, list(module.relations) + [g])


def beta0(module: IntervalModule | DirectSumModule) -> int:
    """Minimal number of homogeneous generators (zeroth total Betti number)."""
    if isinstance(module, DirectSumModule):
        return sum(beta0(m) for m in module.summands)
    return len(module.generators)


def summands_of(module: IntervalModule | DirectSumModule) -> tuple[IntervalModule, ...]:
    if isinstance(module, DirectSumModule):
        return module.summands
    return (module,)
