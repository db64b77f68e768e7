"""Minimal SVG output: plain path elements with circular-arc commands.

The drawing lives in a ``scale(1,-1)`` group so the mathematical y-up
orientation is preserved; the viewBox fits every layer with a 5% margin.
Output is deterministic (fixed number formatting), so renders are diffable.
"""

from __future__ import annotations

import math

from .geometry import BoundaryChain, Point, Segment


def _fmt(v: float) -> str:
    s = f"{v:.12g}"
    return "0" if s == "-0" else s


def chain_path(chain: BoundaryChain) -> str:
    start = chain.pieces[0].start_point()
    parts = [f"M {_fmt(start.x)} {_fmt(start.y)}"]
    for p in chain.pieces:
        e = p.end_point()
        if isinstance(p, Segment):
            parts.append(f"L {_fmt(e.x)} {_fmt(e.y)}")
        else:
            large = 1 if p.extent() > math.pi else 0
            r = _fmt(p.radius)
            parts.append(f"A {r} {r} 0 {large} 1 {_fmt(e.x)} {_fmt(e.y)}")
    parts.append("Z")
    return " ".join(parts)


def render_svg(omega: BoundaryChain,
               inner: BoundaryChain | None = None,
               cheeger: BoundaryChain | None = None,
               dots: tuple[Point, ...] = (),
               witnesses: tuple[Point, ...] = ()) -> str:
    chains = [c for c in (omega, inner, cheeger) if c is not None]
    x0 = min(c.bbox()[0] for c in chains)
    y0 = min(c.bbox()[1] for c in chains)
    x1 = max(c.bbox()[2] for c in chains)
    y1 = max(c.bbox()[3] for c in chains)
    margin = 0.05 * max(x1 - x0, y1 - y0)
    vx, vy = x0 - margin, -(y1 + margin)
    vw, vh = (x1 - x0) + 2 * margin, (y1 - y0) + 2 * margin
    sw = 0.004 * max(vw, vh)
    mark = 0.012 * max(vw, vh)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_fmt(vx)} {_fmt(vy)} {_fmt(vw)} {_fmt(vh)}">',
        '<g transform="scale(1,-1)" fill="none" '
        f'stroke-width="{_fmt(sw)}">',
        f'<g id="omega" stroke="#202020">'
        f'<path d="{chain_path(omega)}"/></g>',
    ]
    if inner is not None:
        lines.append(f'<g id="inner" stroke="#4878a8" '
                     f'stroke-dasharray="{_fmt(3 * sw)} {_fmt(2 * sw)}">'
                     f'<path d="{chain_path(inner)}"/></g>')
    if cheeger is not None:
        lines.append(f'<g id="cheeger" stroke="#c03030">'
                     f'<path d="{chain_path(cheeger)}"/></g>')
    if dots:
        circles = "".join(
            f'<circle cx="{_fmt(p.x)}" cy="{_fmt(p.y)}" r="{_fmt(mark)}"/>'
            for p in dots)
        lines.append(f'<g id="dots" fill="#202020" stroke="none">{circles}</g>')
    if witnesses:
        circles = "".join(
            f'<circle cx="{_fmt(p.x)}" cy="{_fmt(p.y)}" r="{_fmt(0.7 * mark)}"/>'
            for p in witnesses)
        lines.append(f'<g id="witnesses" fill="#2a8a2a" stroke="none">'
                     f'{circles}</g>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
