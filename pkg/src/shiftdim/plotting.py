"""Render step-function curves to image files with matplotlib."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .stepfun import StepFunction  # noqa: E402


def _steps_xy(f: StepFunction, tau_max: float):
    xs, ys = [], []
    bps = [float(b) for b in f.breakpoints]
    for k, (b, v) in enumerate(zip(bps, f.values)):
        end = bps[k + 1] if k + 1 < len(bps) else max(tau_max, b + 1.0)
        y = None if v == math.inf else v
        xs.extend([b, end])
        ys.extend([y, y])
    return xs, ys


def save_curve_plot(curves: dict[str, StepFunction], path: str,
                    title: str = "", tau_max: float | None = None) -> None:
    """Write a PNG/PDF/SVG figure of one or more labelled step functions."""
    if tau_max is None:
        tau_max = max(
            (float(f.breakpoints[-1]) for f in curves.values()), default=1.0
        ) * 1.25 + 0.5
    fig, ax = plt.subplots(figsize=(6.0, 3.6))
    for label, f in curves.items():
        xs, ys = _steps_xy(f, tau_max)
        ax.plot(xs, ys, drawstyle="default", label=label, linewidth=2)
        # mark left-closed segment starts
        ax.plot(
            [float(b) for b in f.breakpoints],
            [None if v == math.inf else v for v in f.values],
            "o", markersize=3, color=ax.lines[-1].get_color(),
        )
    ax.set_xlabel(r"$\tau$")
    ax.set_ylabel("value")
    ax.set_xlim(0, tau_max)
    ax.set_ylim(bottom=-0.3)
    if title:
        ax.set_title(title)
    if len(curves) > 1:
        ax.legend(loc="upper right", fontsize=8)
    ax.grid(alpha=0.25)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def curve_to_svg(f: StepFunction, width: int = 480, height: int = 280,
                 tau_max: float | None = None) -> str:
    """Hand-rolled axis-aligned SVG polyline of a step function (write-only
    output format; no parser exists on purpose)."""
    if tau_max is None:
        tau_max = float(f.breakpoints[-1]) * 1.25 + 1.0
    finite_vals = [v for v in f.values if v != math.inf]
    vmax = max(finite_vals + [1])
    pad = 30

    def sx(t: float) -> float:
        return pad + (width - 2 * pad) * t / tau_max

    def sy(v: float) -> float:
        return height - pad - (height - 2 * pad) * v / vmax

    bps = [float(b) for b in f.breakpoints]
    points = []
    for k, (b, v) in enumerate(zip(bps, f.values)):
        if v == math.inf:
            continue
        end = bps[k + 1] if k + 1 < len(bps) else tau_max
        points.append((sx(b), sy(v)))
        points.append((sx(end), sy(v)))
    path = " ".join(f"{x:.2f},{y:.2f}" for x, y in points)
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">'
        f'<rect width="{width}" height="{height}" fill="white"/>'
        f'<line x1="{pad}" y1="{height - pad}" x2="{width - pad}" y2="{height - pad}" stroke="black"/>'
        f'<line x1="{pad}" y1="{pad}" x2="{pad}" y2="{height - pad}" stroke="black"/>'
        f'<polyline points="{path}" fill="none" stroke="#3465a4" stroke-width="2"/>'
        f'<text x="{width - pad}" y="{height - 8}" font-size="11" text-anchor="end">tau</text>'
        f'<text x="{pad}" y="{pad - 8}" font-size="11">value (max {vmax})</text>'
        "</svg>\n"
    )
