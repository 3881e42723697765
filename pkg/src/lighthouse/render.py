"""Schematic SVG drawings of a lighthouse scene.

Shading follows the usual convention: white is lit, dark gray is shadow,
light gray is the non-emitting body. Only lighthouse bodies are drawn as
``<circle>`` elements; every other mark is a path or line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .scene import Scene, TangentSolution, Variant

BODY_FILL = "#c8c8c8"
DARK_FILL = "#505050"
LIGHT_STROKE = "#e0a800"
RAY_STROKE = "#c03030"


@dataclass(frozen=True)
class RenderOptions:
    width_px: int = 800
    height_px: int = 800
    show_rays: bool = True
    show_dark_region: bool = True
    variant: Variant = Variant.CENTER

    def __post_init__(self):
        if self.width_px < 64 or self.height_px < 64:
            raise ValueError("canvas must be at least 64x64 pixels")


def _f(v: float) -> str:
    s = f"{v:.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _pt(p) -> str:
    return f"{_f(p.x)},{_f(p.y)}"


def _bounds(scene: Scene, sol: TangentSolution | None):
    xs = [c.x for c in scene.centers] + [0.0]
    ys = [c.y for c in scene.centers] + [0.0]
    lo_x, hi_x = min(xs) - 1.0, max(xs) + 1.0
    lo_y, hi_y = min(ys) - 1.0, max(ys) + 1.0
    if sol is not None:
        for p in (sol.apex, sol.emission, sol.mirrored().emission):
            lo_x, hi_x = min(lo_x, p.x), max(hi_x, p.x)
            lo_y, hi_y = min(lo_y, p.y), max(hi_y, p.y)
    mx = 0.1 * (hi_x - lo_x)
    my = 0.1 * (hi_y - lo_y)
    return lo_x - mx, lo_y - my, hi_x + mx, hi_y + my


def _light_mark(scene: Scene, i: int, variant: Variant, stroke: float) -> str:
    c = scene.centers[i]
    half = scene.alpha / 2.0
    mid = scene.facing_angle(i)
    if half >= math.pi:
        return ""
    a = c.x + math.cos(mid - half), c.y + math.sin(mid - half)
    b = c.x + math.cos(mid + half), c.y + math.sin(mid + half)
    large = 1 if 2 * half > math.pi else 0
    arc = f"A1,1 0 {large} 1 {_f(b[0])},{_f(b[1])}"
    if variant is Variant.CENTER:
        d = f"M{_f(c.x)},{_f(c.y)} L{_f(a[0])},{_f(a[1])} {arc} Z"
        return f'<path class="cone" d="{d}" fill="#ffffff" stroke="{LIGHT_STROKE}" stroke-width="{_f(stroke)}"/>'
    d = f"M{_f(a[0])},{_f(a[1])} {arc}"
    return f'<path class="arc" d="{d}" fill="none" stroke="{LIGHT_STROKE}" stroke-width="{_f(3 * stroke)}"/>'


def render_scene(scene: Scene, opts: RenderOptions = RenderOptions(), analytic: TangentSolution | None = None) -> str:
    """SVG text for ``scene``; ``analytic`` adds the governing rays and shadow."""
    sol = analytic if scene.n > 1 else None
    x0, y0, x1, y1 = _bounds(scene, sol)
    w, h = x1 - x0, y1 - y0
    stroke = max(w, h) / 400.0
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{opts.width_px}" '
        f'height="{opts.height_px}" viewBox="{_f(x0)} {_f(-y1)} {_f(w)} {_f(h)}">',
        f'<rect x="{_f(x0)}" y="{_f(-y1)}" width="{_f(w)}" height="{_f(h)}" fill="#ffffff"/>',
        '<g transform="scale(1,-1)">',
    ]
    if sol is not None and opts.show_dark_region:
        a, b, a2 = sol.tangency, sol.apex, sol.mirrored().tangency
        d = f"M{_pt(a)} L{_pt(b)} L{_pt(a2)} A1,1 0 0 1 {_pt(a)} Z"
        out.append(f'<path class="dark" d="{d}" fill="{DARK_FILL}" stroke="none"/>')
    for i, c in enumerate(scene.centers):
        out.append(
            f'<circle cx="{_f(c.x)}" cy="{_f(c.y)}" r="{_f(scene.radius)}" fill="{BODY_FILL}" '
            f'stroke="#000000" stroke-width="{_f(stroke)}"/>'
        )
        mark = _light_mark(scene, i, opts.variant, stroke)
        if mark:
            out.append(mark)
    if sol is not None and opts.show_rays:
        for s in (sol, sol.mirrored()):
            out.append(
                f'<line class="ray" x1="{_f(s.emission.x)}" y1="{_f(s.emission.y)}" x2="{_f(s.apex.x)}" '
                f'y2="{_f(s.apex.y)}" stroke="{RAY_STROKE}" stroke-width="{_f(stroke)}" stroke-dasharray="{_f(4 * stroke)}"/>'
            )
        r = 4 * stroke
        ax, ay = sol.apex.x, sol.apex.y
        d = f"M{_f(ax - r)},{_f(ay - r)} L{_f(ax + r)},{_f(ay + r)} M{_f(ax - r)},{_f(ay + r)} L{_f(ax + r)},{_f(ay - r)}"
        out.append(f'<path class="apex" d="{d}" stroke="#000000" stroke-width="{_f(stroke)}"/>')
    r = 4 * stroke
    out.append(
        f'<path class="placement-center" d="M{_f(-r)},0 L{_f(r)},0 M0,{_f(-r)} L0,{_f(r)}" '
        f'stroke="#000000" stroke-width="{_f(stroke)}"/>'
    )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
