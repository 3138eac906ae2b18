"""Deterministic SVG root plots.

Coordinates are written in complex-plane units inside a y-flipped group, so
a circle of radius r in the plane is literally ``r="..."`` in the file.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from .complexroots import RootSet, explicit_bound
from .limitsets import LimitComponents

COLORS = {"C12": "#c0392b", "C13": "#2c6fbb", "C23": "#2e8b57", "hyperbola": "#c0392b"}


def _f(v: float) -> str:
    s = f"{v:.6f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def _polyline(points, color, cls) -> str:
    pts = " ".join(f"{_f(z.real)},{_f(z.imag)}" for z in points)
    return (f'<polyline class="{cls}" points="{pts}" fill="none" stroke="{color}" '
            f'stroke-width="1.5" vector-effect="non-scaling-stroke"/>')


def render_svg(title: str, roots: RootSet, components: LimitComponents | None = None,
               bound_n: int | None = None, half_width: float | None = None, size: int = 640) -> str:
    """Root scatter with optional limit-set polylines and explicit-bound circle."""
    pts = roots.values
    reach = max((abs(z) for z in pts), default=1.0)
    if bound_n is not None:
        reach = max(reach, explicit_bound(bound_n))
    w = half_width or math.ceil(reach + 0.5)
    cx = 0.0 if bound_n is not None or components is None else -1.0
    body = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="{_f(cx - w)} {_f(-w)} {_f(2 * w)} {_f(2 * w)}">',
        f"<title>{escape(title)}</title>",
        f'<rect x="{_f(cx - w)}" y="{_f(-w)}" width="{_f(2 * w)}" height="{_f(2 * w)}" fill="white"/>',
        '<g transform="scale(1,-1)">',
        f'<line class="axis" x1="{_f(cx - w)}" y1="0" x2="{_f(cx + w)}" y2="0" stroke="#999" '
        'stroke-width="1" vector-effect="non-scaling-stroke"/>',
        f'<line class="axis" x1="0" y1="{_f(-w)}" x2="0" y2="{_f(w)}" stroke="#999" '
        'stroke-width="1" vector-effect="non-scaling-stroke"/>',
    ]
    if bound_n is not None:
        r = explicit_bound(bound_n)
        body.append(f'<circle class="bound" cx="0" cy="0" r="{_f(r)}" fill="none" stroke="#555" '
                    'stroke-dasharray="4 3" stroke-width="1" vector-effect="non-scaling-stroke"/>')
    if components is not None:
        for name, runs in components.polylines().items():
            for run in runs:
                if len(run) > 1:
                    body.append(_polyline(run, COLORS[name], f"component {name}"))
        for s in components.special:
            body.append(f'<circle class="special" cx="{_f(s.real)}" cy="{_f(s.imag)}" r="{_f(w / 80)}" '
                        'fill="black"/>')
    dot = w / 120
    for z in pts:
        body.append(f'<circle class="root" cx="{_f(z.real)}" cy="{_f(z.imag)}" r="{_f(dot)}" fill="#1f3a93"/>')
    body += ["</g>", "</svg>", ""]
    return "\n".join(body)
