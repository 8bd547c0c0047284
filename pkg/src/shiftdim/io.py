"""JSON wire formats for modules, step functions, and contour specs.

Rationals travel as plain integers or ``[numerator, denominator]`` pairs.
Module files carry a ``type`` tag: ``interval``, ``direct_sum`` or ``grid``.
Dumps sort keys so golden files are byte-stable.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Any

from .contours import (
    BUILTIN_DENSITIES,
    ComponentwiseShiftContour,
    Contour,
    CurveContour,
    DistanceTypeContour,
    MultivariateShiftContour,
    StandardContour,
    TruncatedContour,
)
from .degrees import Degree
from .grid import GridModule
from .intervals import DirectSumModule, IntervalModule
from .stepfun import StepFunction


def rational_to_json(q: Fraction):
    return int(q) if q.denominator == 1 else [q.numerator, q.denominator]


def rational_from_json(obj) -> Fraction:
    if isinstance(obj, bool):
        raise ValueError("booleans are not rationals")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, float):
        return Fraction(obj)
    if isinstance(obj, list) and len(obj) == 2:
        return Fraction(int(obj[0]), int(obj[1]))
    if isinstance(obj, str):
        return Fraction(obj)
    raise ValueError(f"cannot read rational from {obj!r}")


def degree_to_json(d: Degree) -> list:
    return [rational_to_json(c) for c in d.coords]


def degree_from_json(obj) -> Degree:
    if not isinstance(obj, list) or not obj:
        raise ValueError(f"a degree must be a nonempty list, got {obj!r}")
    return Degree(*(rational_from_json(c) for c in obj))


# -- modules ----------------------------------------------------------------

def module_to_json(module) -> dict:
    if isinstance(module, IntervalModule):
        return {
            "type": "interval",
            "r": module.r,
            "generators": [degree_to_json(g) for g in module.generators],
            "relations": [degree_to_json(rel) for rel in module.relations],
        }
    if isinstance(module, DirectSumModule):
        return {
            "type": "direct_sum",
            "summands": [module_to_json(m) for m in module.summands],
        }
    if isinstance(module, GridModule):
        return {
            "type": "grid",
            "p": module.p,
            "scale": module.scale,
            "xs": list(module.xs),
            "ys": list(module.ys),
            "dims": [list(col) for col in module.dims],
            "hmaps": {
                f"{i},{j}": [e for row in mat for e in row]
                for (i, j), mat in sorted(module.hmaps.items())
            },
            "vmaps": {
                f"{i},{j}": [e for row in mat for e in row]
                for (i, j), mat in sorted(module.vmaps.items())
            },
        }
    raise TypeError(f"cannot serialize {type(module).__name__}")


def _maps_from_json(raw: dict, dims, horizontal: bool) -> dict:
    out = {}
    for key, flat in raw.items():
        i_s, j_s = key.split(",")
        i, j = int(i_s), int(j_s)
        src = dims[i][j]
        tgt = dims[i + 1][j] if horizontal else dims[i][j + 1]
        if len(flat) != src * tgt:
            raise ValueError(f"map {key} has {len(flat)} entries, expected {tgt}x{src}")
        out[(i, j)] = tuple(
            tuple(flat[r * src + c] for c in range(src)) for r in range(tgt)
        )
    return out


def module_from_json(data: dict):
    kind = data.get("type")
    if kind == "interval":
        return IntervalModule(
            [degree_from_json(g) for g in data["generators"]],
            [degree_from_json(rel) for rel in data.get("relations", [])],
        )
    if kind == "direct_sum":
        return DirectSumModule([module_from_json(m) for m in data["summands"]])
    if kind == "grid":
        dims = [list(col) for col in data["dims"]]
        return GridModule(
            data["xs"],
            data["ys"],
            dims,
            _maps_from_json(data.get("hmaps", {}), dims, horizontal=True),
            _maps_from_json(data.get("vmaps", {}), dims, horizontal=False),
            p=data.get("p", 2),
            scale=data.get("scale", 1),
        )
    raise ValueError(f"unknown module type {kind!r}")


# -- step functions ---------------------------------------------------------

def curve_to_json(f: StepFunction) -> dict:
    return {
        "breakpoints": [rational_to_json(b) for b in f.breakpoints],
        "values": ["inf" if v == math.inf else v for v in f.values],
    }


def curve_from_json(data: dict) -> StepFunction:
    values = [math.inf if v == "inf" else int(v) for v in data["values"]]
    return StepFunction([rational_from_json(b) for b in data["breakpoints"]], values)


def curve_to_csv(f: StepFunction) -> str:
    lines = ["tau,value"]
    for b, v in zip(f.breakpoints, f.values):
        lines.append(f"{float(b)},{'inf' if v == math.inf else v}")
    return "\n".join(lines) + "\n"


# -- contour specs ----------------------------------------------------------

def _density_from_json(spec, r: int):
    if not isinstance(spec, dict) or "name" not in spec:
        raise ValueError(f"density spec needs a name: {spec!r}")
    name = spec["name"]
    if name not in BUILTIN_DENSITIES:
        raise ValueError(f"unknown density {name!r}; builtins: {sorted(BUILTIN_DENSITIES)}")
    if name == "const":
        return BUILTIN_DENSITIES[name](spec.get("value", 1.0))
    if name == "exp_decay":
        return BUILTIN_DENSITIES[name](spec.get("rates", [1.0] * r))
    return BUILTIN_DENSITIES[name](spec.get("sigma", 1.0), spec.get("center"))


def _shift_from_json(spec):
    if spec == "identity" or spec is None:
        return lambda e: e
    if isinstance(spec, dict) and spec.get("name") == "linear":
        slope = float(spec.get("slope", 1.0))
        if slope < 0:
            raise ValueError("linear shift slope must be >= 0")
        return lambda e: slope * e
    if isinstance(spec, dict) and spec.get("name") == "power":
        exponent = float(spec.get("exponent", 1.0))
        if exponent < 1:
            raise ValueError("power shifts need exponent >= 1 to stay super-additive")
        return lambda e: e ** exponent
    raise ValueError(f"unknown shift function {spec!r}")


def contour_from_json(data: dict) -> Contour:
    kind = data.get("type")
    if kind == "standard":
        return StandardContour(data["v"])
    if kind == "truncated":
        return TruncatedContour(contour_from_json(data["inner"]), data["alpha"])
    if kind == "curve":
        vertices = [(t, pt) for t, pt in data["vertices"]]
        return CurveContour(vertices, data["translation_axes"])
    if kind == "distance":
        r = len(data["v"])
        return DistanceTypeContour(
            data["v"],
            _density_from_json(data["density"], r),
            tol=data.get("tol", 1e-9),
            quad_depth=data.get("quad_depth", 9),
            search_cap=data.get("search_cap", 32.0),
            region=data.get("region", "lshape"),
        )
    if kind == "componentwise":
        densities = [_density_from_json(d, 1) for d in data["densities"]]
        shifts = [_shift_from_json(s) for s in data.get("shifts", [None] * len(densities))]
        return ComponentwiseShiftContour(
            densities,
            shifts,
            tol=data.get("tol", 1e-9),
            quad_depth=data.get("quad_depth", 10),
            search_cap=data.get("search_cap", 32.0),
        )
    if kind == "multivariate_shift":
        r = len(data["v"])
        densities = [_density_from_json(d, r) for d in data["densities"]]
        return MultivariateShiftContour(
            densities,
            data["v"],
            grid0=data.get("grid0", 8),
            refine_levels=data.get("refine_levels", 4),
            search_cap=data.get("search_cap", 16.0),
            quad_depth=data.get("quad_depth", 9),
        )
    raise ValueError(f"unknown contour type {kind!r}")


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def load_json(path) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)
