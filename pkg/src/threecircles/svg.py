"""Raw SVG rendering of an interval, its discs and a set of points."""
from __future__ import annotations

import math
from typing import Iterable, Optional

from .polycore import ComplexRational
from .regions import IntervalLR, cot_enclosure

SIZE = 480
PAD = 0.08
STROKES = {"C0": "#1f77b4", "upper": "#d62728", "lower": "#2ca02c"}


def disc_geometry(iv: IntervalLR, k: Optional[int] = None) -> list[tuple[str, float, float, float]]:
    """``(name, cx, cy, radius)`` in float coordinates.

    With ``k`` None: the disc on diameter ``(l, r)`` plus the two equilateral
    circumdiscs.  Otherwise the two Obreshkoff discs of index ``k``.
    """
    m = float(iv.mid)
    d = float(iv.width) / 2
    if k is None:
        h = d / math.sqrt(3)
        out = [("C0", m, 0.0, d)]
    else:
        lo, hi = cot_enclosure(k, 64)
        h = d * float((lo + hi) / 2)
        out = []
    rad = math.hypot(d, h)
    out += [("upper", m, h, rad), ("lower", m, -h, rad)]
    return out


def _fmt(v: float) -> str:
    s = f"{v:.4f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(iv: IntervalLR, points: Iterable[ComplexRational] = (), k: Optional[int] = None) -> str:
    discs = disc_geometry(iv, k)
    pts = [(float(z.re), float(z.im)) for z in points]
    xs = [cx - r for _, cx, _, r in discs] + [cx + r for _, cx, _, r in discs] + [x for x, _ in pts]
    ys = [cy - r for _, _, cy, r in discs] + [cy + r for _, _, cy, r in discs] + [y for _, y in pts]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    span = max(x1 - x0, y1 - y0) or 1.0
    scale = SIZE * (1 - 2 * PAD) / span
    ox = SIZE / 2 - scale * (x0 + x1) / 2
    oy = SIZE / 2 + scale * (y0 + y1) / 2

    def tx(x: float) -> str:
        return _fmt(ox + scale * x)

    def ty(y: float) -> str:
        return _fmt(oy - scale * y)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="#ffffff"/>',
        f'<line x1="0" y1="{ty(0)}" x2="{SIZE}" y2="{ty(0)}" stroke="#bbbbbb" stroke-width="0.5"/>',
    ]
    for name, cx, cy, r in discs:
        # full circle as two half arcs
        rr = _fmt(scale * r)
        lines.append(
            f'<path class="{name}" d="M {tx(cx - r)} {ty(cy)} '
            f'A {rr} {rr} 0 1 0 {tx(cx + r)} {ty(cy)} '
            f'A {rr} {rr} 0 1 0 {tx(cx - r)} {ty(cy)} Z" '
            f'fill="none" stroke="{STROKES[name]}" stroke-width="1.5"/>'
        )
    lines.append(
        f'<line class="interval" x1="{tx(float(iv.l))}" y1="{ty(0)}" '
        f'x2="{tx(float(iv.r))}" y2="{ty(0)}" stroke="#000000" stroke-width="2.5"/>'
    )
    for x, y in pts:
        lines.append(f'<circle class="root" cx="{tx(x)}" cy="{ty(y)}" r="3" fill="#000000"/>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
