"""Deterministic SVG rendering of laminations and gaps.

Chords are drawn as geodesics of the Poincaré disk: circular arcs meeting
the unit circle at right angles, falling back to a straight segment for
antipodal endpoints.  This is the one module allowed floating point — the
pictures carry no mathematical contract — but output is still byte-stable:
fixed 6-decimal formatting and canonically sorted drawing order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from .chords import Chord
from .circle import format_angle
from .lamsets import LamSet, holes

DEFAULT_PALETTE = ("#1f3a63", "#b03a2e", "#1e8449", "#7d3c98", "#b7950b")


@dataclass
class RenderSpec:
    width: int = 600
    height: int = 600
    stroke: float = 1.2
    circle_stroke: float = 1.5
    palette: Tuple[str, ...] = DEFAULT_PALETTE
    label_angles: bool = False
    highlight: Set[Chord] = field(default_factory=set)
    highlight_color: str = "#d35400"
    highlight_stroke: float = 2.5


def _pt(theta: Fraction, cx: float, cy: float, r: float) -> Tuple[float, float]:
    a = 2 * math.pi * float(theta)
    # SVG y grows downward; negate sin so positive angles run counterclockwise
    return cx + r * math.cos(a), cy - r * math.sin(a)


def _fmt(v: float) -> str:
    out = f"{v:.6f}"
    return "0.000000" if out == "-0.000000" else out


def _chord_path(c: Chord, cx: float, cy: float, r: float) -> str:
    x1, y1 = _pt(c.a, cx, cy, r)
    x2, y2 = _pt(c.b, cx, cy, r)
    if (c.b - c.a) % 1 == Fraction(1, 2):
        return f"M {_fmt(x1)} {_fmt(y1)} L {_fmt(x2)} {_fmt(y2)}"
    # unit-disk coordinates (y up) for the geodesic construction
    ux1, uy1 = math.cos(2 * math.pi * float(c.a)), math.sin(2 * math.pi * float(c.a))
    ux2, uy2 = math.cos(2 * math.pi * float(c.b)), math.sin(2 * math.pi * float(c.b))
    dot = ux1 * ux2 + uy1 * uy2
    ox, oy = (ux1 + ux2) / (1 + dot), (uy1 + uy2) / (1 + dot)
    rad = math.sqrt(ox * ox + oy * oy - 1)
    # the geodesic is the minor arc; sweep by orientation around the center
    cross = (ux1 - ox) * (uy2 - oy) - (uy1 - oy) * (ux2 - ox)
    sweep = 0 if cross > 0 else 1  # y-flip inverts handedness
    rr = rad * r
    return (f"M {_fmt(x1)} {_fmt(y1)} "
            f"A {_fmt(rr)} {_fmt(rr)} 0 0 {sweep} {_fmt(x2)} {_fmt(y2)}")


def _collect_chords(obj) -> List[Chord]:
    if isinstance(obj, Chord):
        return [obj]
    if isinstance(obj, LamSet):
        return sorted({e for e, _ in holes(obj)})
    if hasattr(obj, "leaves"):  # Lamination
        return sorted(obj.leaves)
    if hasattr(obj, "edge_chords"):  # any gap generator
        return sorted(set(obj.edge_chords(6)))
    if isinstance(obj, Iterable):
        return sorted(set(obj))
    raise TypeError(f"cannot render {type(obj).__name__}")


def render(obj, spec: Optional[RenderSpec] = None) -> str:
    """SVG document for a lamination, laminational set, gap generator,
    chord, or plain iterable of chords."""
    spec = spec or RenderSpec()
    w, h = spec.width, spec.height
    cx, cy = w / 2.0, h / 2.0
    r = 0.45 * min(w, h)
    chords = _collect_chords(obj)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        f'  <rect width="{w}" height="{h}" fill="white"/>',
        f'  <circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(r)}" '
        f'fill="none" stroke="black" stroke-width="{spec.circle_stroke}"/>',
    ]
    for i, c in enumerate(chords):
        if c.degenerate:
            continue
        hl = c in spec.highlight
        color = spec.highlight_color if hl else spec.palette[i % len(spec.palette)]
        width = spec.highlight_stroke if hl else spec.stroke
        out.append(
            f'  <path d="{_chord_path(c, cx, cy, r)}" fill="none" '
            f'stroke="{color}" stroke-width="{width}"/>'
        )
    if spec.label_angles:
        seen = set()
        for c in chords:
            for v in (c.a, c.b):
                if v in seen:
                    continue
                seen.add(v)
                x, y = _pt(v, cx, cy, r * 1.06)
                out.append(
                    f'  <text x="{_fmt(x)}" y="{_fmt(y)}" font-size="10" '
                    f'text-anchor="middle">{format_angle(v)}</text>'
                )
    out.append("</svg>")
    return "\n".join(out) + "\n"
