"""Schematic SVG drawing of a diagram: two rows of circles joined by straight arcs."""
import math
from xml.sax.saxutils import escape

from .diagram import LOWER, UPPER, Diagram, Port, as_port

__all__ = ["render_svg", "write_svg"]

COLORS = {"A-upper": "#1f77b4", "A-lower": "#2ca02c", "B": "#d62728", "C": "#9467bd"}
SPACING = 160
RADIUS = 45
TOP, BOTTOM = 110, 330


def _centre(side, i):
    return SPACING * i, TOP if side == UPPER else BOTTOM


def _slot_positions(diagram: Diagram) -> dict:
    """Place every port on its circle, clockwise, starting just after the pole."""
    ports = {}
    for arc in diagram.arcs:
        for x in (arc.u, arc.v):
            p = as_port(x)
            ports.setdefault((p.side, p.cycle), set()).add(p)
    for p, q in diagram.scaffold:
        for x in (p, q):
            ports.setdefault((x.side, x.cycle), set()).add(x)
    poles = {(p.side, p.cycle): p for p in diagram.poles}
    out = {}
    for key, group in ports.items():
        order = sorted(group, key=lambda x: (x.pos % diagram.d, x.sub))
        pole = poles.get(key)
        if pole is not None and pole in order:
            k = order.index(pole) + 1
            order = order[k:] + order[:k]
        side, i = key
        cx, cy = _centre(side, i)
        # Screen angles grow clockwise; the upper pole faces up, the lower down.
        start = -90.0 if side == UPPER else 90.0
        m = len(order)
        for k, x in enumerate(order):
            theta = math.radians(start + 360.0 * (k + 0.5) / m)
            out[x] = (cx + RADIUS * math.cos(theta), cy + RADIUS * math.sin(theta))
    return out


def render_svg(diagram: Diagram) -> str:
    n = diagram.n
    width = SPACING * (n + 1)
    height = BOTTOM + 110
    pos = _slot_positions(diagram)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
    ]
    title = f"D({diagram.params})" if diagram.params is not None else f"diagram n={n} d={diagram.d}"
    out.append(f'<text x="10" y="20" font-family="sans-serif" font-size="14">{escape(title)}</text>')
    for arc in diagram.arcs:
        (x1, y1), (x2, y2) = pos[as_port(arc.u)], pos[as_port(arc.v)]
        color = COLORS.get(arc.tag, "#555555")
        wraps = arc.u.cycle != arc.v.cycle and abs(arc.u.cycle - arc.v.cycle) == n - 1 and n > 1
        if wraps or (arc.u.cycle == arc.v.cycle and arc.u.side == arc.v.side):
            # Arcs closing the row up leave through the right edge and re-enter on the left.
            if x1 < x2:
                (x1, y1), (x2, y2) = (x2, y2), (x1, y1)
            ym = (y1 + y2) / 2
            out.append(f'<polyline points="{x1:.1f},{y1:.1f} {width:.1f},{ym:.1f}" '
                       f'fill="none" stroke="{color}" stroke-dasharray="4,3"/>')
            out.append(f'<polyline points="0,{ym:.1f} {x2:.1f},{y2:.1f}" '
                       f'fill="none" stroke="{color}" stroke-dasharray="4,3"/>')
        else:
            out.append(f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" '
                       f'stroke="{color}"/>')
    handle = {}
    for h in diagram.gluing:
        handle[(UPPER, h.upper)] = h.upper
        handle[(LOWER, h.lower)] = h.upper
    for side, i in diagram.cycles():
        cx, cy = _centre(side, i)
        label = f"C'{i}" if side == UPPER else f"C''{i}"
        out.append(f'<circle cx="{cx}" cy="{cy}" r="{RADIUS}" fill="#f4f4f4" stroke="black"/>')
        out.append(f'<text x="{cx}" y="{cy - 4}" text-anchor="middle" font-family="sans-serif" '
                   f'font-size="12">{escape(label)}</text>')
        if (side, i) in handle:
            out.append(f'<text x="{cx}" y="{cy + 12}" text-anchor="middle" '
                       f'font-family="sans-serif" font-size="10">x{handle[(side, i)]}</text>')
    for x, (px, py) in sorted(pos.items()):
        if x.sub:
            continue
        out.append(f'<circle cx="{px:.1f}" cy="{py:.1f}" r="2.5" fill="black"/>')
        out.append(f'<text x="{px:.1f}" y="{py - 4:.1f}" font-family="sans-serif" '
                   f'font-size="8">{x.pos}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(diagram: Diagram, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_svg(diagram))
