"""Command-line front end.

Exit codes: 0 success, 1 malformed input, 2 computation refused (oracle cap,
wrong dimension for the fast path, grid margin), 3 internal invariant
violation.  Degrees on the command line are comma-separated rationals such
as ``--v 3/2,1``; files are always JSON.  ``SHIFTDIM_THREADS`` caps the
worker count used for independent curve evaluations.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from . import io
from .algorithm import shift_dimension_2d, stable_rank_curve
from .degrees import Degree, parse_degree
from .errors import ComputationRefused, InternalInvariantError
from .grid import (
    GridModule,
    beta0_grid,
    shift_dimension_bruteforce,
    stable_rank_curve_grid,
)
from .intervals import DirectSumModule, IntervalModule, MalformedModule, beta0, truncate
from .report import combined_oracle_grid, locus_report
from .stepfun import StepFunction


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("SHIFTDIM_THREADS", "1")))
    except ValueError:
        return 1


def _load_module(path: str):
    return io.module_from_json(io.load_json(path))


def _emit(args, payload: str) -> None:
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _result_json(res) -> dict:
    return {
        "dimension": res.dimension,
        "basis": [io.degree_to_json(g) for g in res.basis],
        "iterations": res.iterations,
    }


def cmd_shiftdim(args) -> int:
    module = _load_module(args.module)
    if not isinstance(module, IntervalModule):
        raise ComputationRefused(
            "the fast path needs a single interval module; use `oracle` for sums/grids"
        )
    v = parse_degree(args.v)
    order = {"above": "from_above", "below": "from_below"}[args.order]
    res = shift_dimension_2d(module, v, order)
    _emit(args, io.dumps(_result_json(res)))
    return 0


def _curve_for(module, v: Degree, cap: int, p: int) -> StepFunction:
    if isinstance(module, IntervalModule):
        return stable_rank_curve(module, v)
    if isinstance(module, GridModule):
        grid, scale = module, module.scale
    else:
        grid, scale = combined_oracle_grid(module.summands, v, p=p)
    return stable_rank_curve_grid(
        grid, v.scale(scale), cap=cap, workers=_threads()
    )


def _clip_curve(f: StepFunction, tau_max) -> StepFunction:
    keep = [(b, v) for b, v in zip(f.breakpoints, f.values) if b <= tau_max]
    return StepFunction([b for b, _ in keep], [v for _, v in keep])


def cmd_curve(args) -> int:
    module = _load_module(args.module)
    v = parse_degree(args.v)
    curve = _curve_for(module, v, args.cap, args.p)
    if args.tau_max is not None:
        curve = _clip_curve(curve, Fraction(args.tau_max))
    if args.plot:
        from .plotting import save_curve_plot

        save_curve_plot({"dim": curve}, args.plot)
    if args.format == "csv":
        _emit(args, io.curve_to_csv(curve))
    elif args.format == "svg":
        from .plotting import curve_to_svg

        _emit(args, curve_to_svg(curve))
    else:
        _emit(args, io.dumps(io.curve_to_json(curve)))
    return 0


def cmd_oracle(args) -> int:
    module = _load_module(args.module)
    v = parse_degree(args.v)
    if isinstance(module, GridModule):
        grid, scale = module, module.scale
    else:
        grid, scale = combined_oracle_grid(
            module.summands if isinstance(module, DirectSumModule) else [module],
            v,
            p=args.p,
        )
    dim = shift_dimension_bruteforce(grid, v.scale(scale), cap=args.cap)
    if dim is None:
        raise ComputationRefused(f"oracle cap {args.cap} exceeded")
    _emit(args, io.dumps({"dimension": dim, "p": grid.p, "cap": args.cap}))
    return 0


def cmd_beta0(args) -> int:
    module = _load_module(args.module)
    value = beta0_grid(module) if isinstance(module, GridModule) else beta0(module)
    _emit(args, io.dumps({"beta0": value}))
    return 0


def cmd_truncate(args) -> int:
    module = _load_module(args.module)
    if not isinstance(module, IntervalModule):
        raise MalformedModule("truncate expects an interval module file")
    alpha = parse_degree(args.alpha)
    out = truncate(module, alpha)
    payload = io.dumps(io.module_to_json(out))
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(payload)
    _emit(args, io.dumps({"written": args.out, "beta0": beta0(out)}))
    return 0


def cmd_locus(args) -> int:
    parts = []
    for path in args.modules:
        m = _load_module(path)
        parts.extend(m.summands if isinstance(m, DirectSumModule) else [m])
    v = parse_degree(args.v)
    rep = locus_report(parts, v, p=args.p, cap=args.cap, lp=args.lp)
    if args.plot:
        from .plotting import save_curve_plot

        save_curve_plot(
            {"sum of summand curves": rep["summand_total"],
             "direct sum": rep["sum_curve"]},
            args.plot,
        )
    if args.format == "csv":
        cuts = sorted(set(rep["summand_total"].breakpoints) | set(rep["sum_curve"].breakpoints))
        lines = ["tau,summand_total,direct_sum"]
        for b in cuts:
            lines.append(f"{float(b)},{rep['summand_total'](b)},{rep['sum_curve'](b)}")
        _emit(args, "\n".join(lines) + "\n")
    else:
        payload = {
            "locus": [
                [io.rational_to_json(a), "inf" if b is None else io.rational_to_json(b)]
                for a, b in rep["locus"]
            ],
            "err": rep["err"],
            "lp": args.lp,
            "summand_curves": [io.curve_to_json(c) for c in rep["summand_curves"]],
            "sum_curve": io.curve_to_json(rep["sum_curve"]),
        }
        _emit(args, io.dumps(payload))
    return 0


def cmd_contour(args) -> int:
    contour = io.contour_from_json(io.load_json(args.spec))
    x = tuple(float(Fraction(part)) for part in args.x.split(","))
    res = contour.evaluate(x, float(args.eps))
    value = "inf" if res.is_infinite else list(res.value)
    _emit(args, io.dumps({"value": value, "accuracy": res.accuracy}))
    return 0


def cmd_contour_check(args) -> int:
    from .contours import check_contour_axioms

    contour = io.contour_from_json(io.load_json(args.spec))
    rng = random.Random(args.seed)
    skipped = 0

    def samples():
        nonlocal skipped
        produced = 0
        while produced < args.samples:
            x = tuple(rng.uniform(0, args.x_max) for _ in range(contour.r))
            eps = rng.uniform(0, args.eps_max)
            tau = rng.uniform(0, args.eps_max)
            try:
                contour.evaluate(x, 0.0)
            except ValueError:
                skipped += 1  # outside the contour's domain (curve family)
                if skipped > 50 * args.samples:
                    raise ComputationRefused("sampler cannot hit the contour domain")
                continue
            produced += 1
            yield x, eps, tau

    report = check_contour_axioms(contour, samples(), tol=args.tol)
    payload = {
        "passed": report.passed,
        "samples": report.samples,
        "skipped": skipped,
        "tol": args.tol,
        "worst": {
            "reflexivity": report.worst_reflexivity,
            "lax_action": report.worst_lax,
            "monotonicity": report.worst_monotone,
        },
        "failures": report.failures[:3],
    }
    _emit(args, io.dumps(payload))
    return 0 if report.passed else 2


def cmd_selftest(args) -> int:
    from .selftest import run_selftest

    return run_selftest(sys.stdout)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shiftdim",
        description="Shift-dimension of multiparameter persistence modules",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, module=True):
        if module:
            p.add_argument("module", help="module JSON file")
        p.add_argument("-o", "--output", help="write the payload to a file")

    p = sub.add_parser("shiftdim", help="clustering algorithm on an interval module")
    add_common(p)
    p.add_argument("--v", required=True, help="direction, e.g. 4,4 or 3/2,1")
    p.add_argument("--order", choices=["above", "below"], default="above")
    p.add_argument("--format", choices=["json"], default="json")
    p.set_defaults(func=cmd_shiftdim)

    p = sub.add_parser("curve", help="stable-rank curve tau -> dim_{tau v}")
    add_common(p)
    p.add_argument("--v", required=True)
    p.add_argument("--tau-max", dest="tau_max", help="clip the curve at this tau")
    p.add_argument("--cap", type=int, default=16, help="oracle search cap (grid inputs)")
    p.add_argument("--p", type=int, default=2, help="field characteristic (grid inputs)")
    p.add_argument("--format", choices=["json", "csv", "svg"], default="json")
    p.add_argument("--plot", help="also render the curve to this image file")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("oracle", help="brute-force shift-dimension over F_p")
    add_common(p)
    p.add_argument("--v", required=True)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--cap", type=int, default=16)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("beta0", help="minimal number of generators")
    add_common(p)
    p.set_defaults(func=cmd_beta0)

    p = sub.add_parser("truncate", help="quotient away everything above alpha")
    add_common(p)
    p.add_argument("--alpha", required=True)
    p.add_argument("--out", required=True, help="output module JSON file")
    p.set_defaults(func=cmd_truncate)

    p = sub.add_parser("locus", help="non-additivity locus and L^p error")
    p.add_argument("modules", nargs="+", help="summand module JSON files")
    p.add_argument("-o", "--output")
    p.add_argument("--v", required=True)
    p.add_argument("--p", type=int, default=2)
    p.add_argument("--cap", type=int, default=16)
    p.add_argument("--lp", type=float, default=1.0, help="exponent of the L^p error")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--plot", help="render both curves to this image file")
    p.set_defaults(func=cmd_locus)

    p = sub.add_parser("contour", help="evaluate a contour spec at (x, eps)")
    p.add_argument("spec", help="contour spec JSON file")
    p.add_argument("-o", "--output")
    p.add_argument("--x", required=True)
    p.add_argument("--eps", required=True, type=float)
    p.set_defaults(func=cmd_contour)

    p = sub.add_parser("contour-check", help="sample the contour axioms")
    p.add_argument("spec")
    p.add_argument("-o", "--output")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--x-max", dest="x_max", type=float, default=3.0)
    p.add_argument("--eps-max", dest="eps_max", type=float, default=1.0)
    p.set_defaults(func=cmd_contour_check)

    p = sub.add_parser("selftest", help="re-run the built-in worked examples")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ComputationRefused as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 2
    except InternalInvariantError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 3
    except (MalformedModule, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
