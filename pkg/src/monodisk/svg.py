"""SVG rendering for tilings and critical-locus diagrams.

Output is deterministic: fixed 6-decimal coordinate formatting, no
timestamps.  The y axis is flipped at emission so figures appear in the
usual mathematical orientation.  Arcs wider than pi are split in two to
avoid the elliptical-arc large-arc ambiguity.
"""

from __future__ import annotations

import math

from .errors import InvalidN
from .families import Orientation, Tiling
from .geometry import Arc, Contour, Line, Point, from_polar
from .wedge import build_symmetric_wedge, critical_locus, vertex_chain

STYLE_STROKE = "stroke-only"
STYLE_COLORED = "orientation-colored"

FILL_POSITIVE = "#404040"
FILL_NEGATIVE = "#cc3333"


def _fmt(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _move(p: Point) -> str:
    return f"M {_fmt(p.x)} {_fmt(-p.y)}"


def _line_to(p: Point) -> str:
    return f"L {_fmt(p.x)} {_fmt(-p.y)}"


def _arc_to(arc: Arc) -> str:
    """Elliptical-arc commands for one stored arc (split when |sweep| > pi)."""
    pieces = [arc]
    if abs(arc.sweep) > math.pi:
        pieces = list(arc.split_at(0.5))
    cmds = []
    for piece in pieces:
        end = piece.end()
        # after y-flip a counterclockwise sweep runs against SVG's angle sense
        flag = 0 if piece.sweep > 0 else 1
        r = _fmt(piece.radius)
        cmds.append(f"A {r} {r} 0 0 {flag} {_fmt(end.x)} {_fmt(-end.y)}")
    return " ".join(cmds)


def _contour_path(c: Contour) -> str:
    parts = [_move(c.segments[0].start())]
    for seg in c.segments:
        parts.append(_arc_to(seg) if isinstance(seg, Arc) else _line_to(seg.end()))
    parts.append("Z")
    return " ".join(parts)


def _svg_document(body: list[str], cx: float, cy: float, r: float,
                  size_px: int) -> bytes:
    margin = 1.05 * r
    view = (f"{_fmt(cx - margin)} {_fmt(-cy - margin)} "
            f"{_fmt(2 * margin)} {_fmt(2 * margin)}")
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" '
            f'width="{size_px}" height="{size_px}" viewBox="{view}">')
    return ("\n".join([head] + body + ["</svg>", ""])).encode("utf-8")


def to_svg(t: Tiling, style: str = STYLE_STROKE, size_px: int = 640) -> bytes:
    """Render a tiling, one path element per tile."""
    if style not in (STYLE_STROKE, STYLE_COLORED):
        raise ValueError(f"unknown style {style!r}")
    stroke_w = _fmt(t.radius / 200.0)
    body = []
    for pt in t.tiles:
        d = _contour_path(pt.contour)
        if style == STYLE_COLORED:
            fill = FILL_POSITIVE if pt.orientation == Orientation.POSITIVE \
                else FILL_NEGATIVE
            body.append(f'<path d="{d}" fill="{fill}" stroke="#ffffff" '
                        f'stroke-width="{stroke_w}"/>')
        else:
            body.append(f'<path d="{d}" fill="none" stroke="#000000" '
                        f'stroke-width="{stroke_w}"/>')
    return _svg_document(body, t.center.x, t.center.y, t.radius, size_px)


def locus_svg(n: int, size_px: int = 640) -> bytes:
    """Diagram of the vertex configuration and critical locus for one n.

    Shows p, q, both vertex chains, the admissibility rays at +-pi/2n from
    q, the critical arc at distance R from p, the zero-groove wedge for
    context, and the t_max annotation.
    """
    config = vertex_chain(n)  # raises InvalidN for bad n
    locus = critical_locus(n)
    R = locus.R
    p, q = config.p, config.q

    def ray_hit(angle: float) -> Point:
        # intersection of the ray from q at `angle` with |z - p| = R
        ux, uy = math.cos(angle), math.sin(angle)
        wx, wy = q.x - p.x, q.y - p.y
        b = 2.0 * (ux * wx + uy * wy)
        c = wx * wx + wy * wy - R * R
        s = (-b + math.sqrt(b * b - 4.0 * c)) / 2.0
        return Point(q.x + s * ux, q.y + s * uy)

    hit_up = ray_hit(locus.ray_angle)
    hit_dn = ray_hit(-locus.ray_angle)

    body = ['<g stroke="#000000" fill="none" stroke-width="0.012">']
    wedge = build_symmetric_wedge(n, 0.0)
    body.append(f'<path d="{_contour_path(wedge.boundary)}" stroke="#888888"/>')
    for angle_pt in (hit_up, hit_dn):
        body.append(f'<path d="{_move(q)} {_line_to(angle_pt)}"/>')
    crit = Arc(p, R, (hit_dn - p).angle(),
               (hit_up - p).angle() - (hit_dn - p).angle())
    body.append(f'<path d="{_move(crit.start())} {_arc_to(crit)}"/>')
    body.append("</g>")

    body.append('<g fill="#000000" stroke="none">')
    for pt in set(config.chain) | set(config.mirror_chain):
        body.append(f'<circle cx="{_fmt(pt.x)}" cy="{_fmt(-pt.y)}" r="0.035"/>')
    body.append("</g>")
    for label, pt in (("p", p), ("q", q)):
        body.append(f'<text x="{_fmt(pt.x - 0.02)}" y="{_fmt(-pt.y + 0.22)}" '
                    f'font-size="0.16">{label}</text>')
    body.append(f'<text x="{_fmt(q.x)}" y="{_fmt(0.9)}" font-size="0.12">'
                f't_max = {locus.t_max_symmetric:.6f}</text>')

    extent = max(R - 1.0, 2.2)
    return _svg_document(body, 0.0, 0.0, extent, size_px)
