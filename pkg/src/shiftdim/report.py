"""Non-additivity reports: summand curves, direct-sum curve, locus, error.

Summand curves come from the exact clustering algorithm when the summand is
an interval module and from the grid oracle otherwise.  The direct-sum
curve always goes through the grid oracle: all summands are rescaled onto a
common integer lattice with enough margin to reach every death event, then
block-summed.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .algorithm import critical_taus, stable_rank_curve
from .degrees import Degree, common_scale
from .grid import (
    GridModule,
    direct_sum_grids,
    grid_from_intervals,
    scale_grid,
    stable_rank_curve_grid,
)
from .intervals import DirectSumModule, IntervalModule
from .stepfun import StepFunction, err_vp, locus_nonadditivity, sum_curves


def _interval_tau_bound(module: IntervalModule, v: Degree) -> Fraction:
    """A tau by which the interval summand's curve has gone constant."""
    taus = critical_taus(module, v)
    return taus[-1] + 1


def combined_oracle_grid(parts, v: Degree, p: int = 2) -> tuple[GridModule, int]:
    """Block direct sum of mixed interval/grid summands on a shared lattice.

    Returns the grid and the lattice scale (units per original coordinate
    unit); the grid direction corresponding to v is ``v * scale``.
    """
    intervals = [m for m in parts if isinstance(m, IntervalModule)]
    grids = [m for m in parts if isinstance(m, GridModule)]
    if len(intervals) + len(grids) != len(parts):
        raise TypeError("summands must be interval or grid modules")

    coords = [d for m in intervals for d in list(m.generators) + list(m.relations)]
    scale = common_scale(coords + [v])
    for g in grids:
        scale = scale * g.scale // math.gcd(scale, g.scale)

    tau_bound = Fraction(1)
    if not v.is_zero():
        for m in intervals:
            if not m.is_zero():
                tau_bound = max(tau_bound, _interval_tau_bound(m, v))

    pieces: list[GridModule] = []
    if any(not m.is_zero() for m in intervals):
        margin_v = v.scale(scale * math.ceil(tau_bound))
        scaled = DirectSumModule(
            [
                IntervalModule(
                    [g.scale(scale) for g in m.generators],
                    [rel.scale(scale) for rel in m.relations],
                )
                for m in intervals
            ]
        )
        pieces.append(grid_from_intervals(scaled, margin_v, p=p))
    for g in grids:
        if g.p != p:
            raise ValueError(f"grid summand has p={g.p}, requested p={p}")
        factor = scale // g.scale
        pieces.append(scale_grid(g, factor) if factor > 1 else g)

    if not pieces:
        raise ValueError("no nonzero summands")
    total = pieces[0]
    for piece in pieces[1:]:
        total = direct_sum_grids(total, piece)
    return total, scale


def summand_curve(module, v: Degree, p: int = 2, cap: int = 16) -> StepFunction:
    """Stable-rank curve of one summand (fast path for intervals)."""
    if isinstance(module, IntervalModule):
        return stable_rank_curve(module, v)
    if isinstance(module, GridModule):
        grid = module
        direction = v.scale(grid.scale)
        if any(c.denominator != 1 for c in direction.coords):
            factor = common_scale([direction])
            grid = scale_grid(grid, factor)
            direction = direction.scale(factor)
        return stable_rank_curve_grid(grid, direction, cap=cap)
    raise TypeError(f"cannot compute a curve for {type(module).__name__}")


def locus_report(parts, v: Degree, p: int = 2, cap: int = 16, lp: float = 1):
    """Summand curves, oracle direct-sum curve, locus of non-additivity and
    its L^p error, as one dictionary."""
    curves = [summand_curve(m, v, p=p, cap=cap) for m in parts]
    grid, scale = combined_oracle_grid(parts, v, p=p)
    sum_curve = stable_rank_curve_grid(grid, v.scale(scale), cap=cap)
    loc = locus_nonadditivity(curves, sum_curve)
    err = err_vp(curves, sum_curve, lp)
    return {
        "summand_curves": curves,
        "summand_total": sum_curves(curves),
        "sum_curve": sum_curve,
        "locus": loc,
        "err": err,
        "p": p,
        "lp": lp,
    }
