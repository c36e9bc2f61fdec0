"""Deterministic SVG 1.1 rendering of cycle documents.

Circles are native <circle> elements, parabolas are exact quadratic
Bezier arcs (a parabola is exactly a quadratic Bezier), hyperbolas are
sampled polylines with at least 128 points per branch.  All numbers are
formatted to at most 12 significant digits with "-0" normalised, so a
given document always renders to identical bytes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .cycle import CycleQuadruple, FSCcContext, centre, radius_sq
from .errors import Degenerate
from .hypercomplex import SpaceSign
from .numbers import Scalar, fmt12, parse_scalar, scalar_to_json

CANVAS_PX = 512.0
HYPERBOLA_SAMPLES = 160


@dataclass(frozen=True)
class CycleStyle:
    stroke: str = "#1f4e9c"
    dash: bool = False


@dataclass(frozen=True)
class CycleSetDocument:
    sigma: SpaceSign
    cycles: list[tuple[CycleQuadruple, CycleStyle]]
    points: list[tuple[Scalar, Scalar]] = field(default_factory=list)
    viewport: tuple[float, float, float, float] = (-3.0, 3.0, -3.0, 3.0)

    def __post_init__(self):
        umin, umax, vmin, vmax = self.viewport
        if not (umin < umax and vmin < vmax):
            raise ValueError("viewport must satisfy umin < umax and vmin < vmax")


def parse_document(text: str, exact: bool = False) -> CycleSetDocument:
    """Read the JSON document schema; scalars may be numbers or "p/q"."""
    raw = json.loads(text)
    sigma = SpaceSign.parse(raw["sigma"])
    viewport = tuple(float(_scalar(x, False)) for x in raw["viewport"])
    if len(viewport) != 4:
        raise ValueError("viewport needs [umin, umax, vmin, vmax]")
    cycles = []
    for entry in raw.get("cycles", []):
        quad = CycleQuadruple(*(_scalar(entry[key], exact) for key in "klnm"))
        style_raw = entry.get("style", {})
        style = CycleStyle(
            stroke=style_raw.get("stroke", CycleStyle.stroke),
            dash=bool(style_raw.get("dash", False)),
        )
        cycles.append((quad, style))
    points = [
        (_scalar(p[0], exact), _scalar(p[1], exact)) for p in raw.get("points", [])
    ]
    return CycleSetDocument(sigma, cycles, points, viewport)


def document_to_json(doc: CycleSetDocument) -> str:
    payload = {
        "sigma": int(doc.sigma),
        "viewport": list(doc.viewport),
        "cycles": [
            {
                "k": scalar_to_json(c.k),
                "l": scalar_to_json(c.l),
                "n": scalar_to_json(c.n),
                "m": scalar_to_json(c.m),
                "style": {"stroke": style.stroke, "dash": style.dash},
            }
            for c, style in doc.cycles
        ],
        "points": [[scalar_to_json(u), scalar_to_json(v)] for u, v in doc.points],
    }
    return json.dumps(payload)


def _scalar(value, exact: bool) -> Scalar:
    if isinstance(value, str):
        return parse_scalar(value, exact)
    if isinstance(value, bool):
        raise ValueError("booleans are not scalars")
    return float(value) if not exact else parse_scalar(str(value), True)


def render_svg(
    doc: CycleSetDocument,
    comments: list[str] | None = None,
    extras: list[str] | None = None,
    annotations: list[tuple[float, float, str]] | None = None,
) -> str:
    """Well-formed SVG 1.1 text for the document, byte-deterministic.

    ``extras`` are raw elements in mathematical coordinates (drawn in the
    flipped group); ``annotations`` are (u, v, text) labels rendered
    upright.
    """
    umin, umax, vmin, vmax = doc.viewport
    uspan, vspan = umax - umin, vmax - vmin
    height_px = CANVAS_PX * vspan / uspan
    unit = uspan / CANVAS_PX  # one pixel in user units
    stroke_w = 1.5 * unit
    dot_r = 2.0 * unit
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{fmt12(CANVAS_PX)}" height="{fmt12(height_px)}" '
        f'viewBox="{fmt12(umin)} {fmt12(vmin)} {fmt12(uspan)} {fmt12(vspan)}">',
    ]
    for comment in comments or []:
        out.append(f"<!-- {comment} -->")
    flip = vmin + vmax
    out.append(f'<g transform="translate(0,{fmt12(flip)}) scale(1,-1)">')
    axis_w = fmt12(0.75 * unit)
    if vmin < 0 < vmax:
        out.append(
            f'<line x1="{fmt12(umin)}" y1="0" x2="{fmt12(umax)}" y2="0" '
            f'stroke="#bbbbbb" stroke-width="{axis_w}"/>'
        )
    if umin < 0 < umax:
        out.append(
            f'<line x1="0" y1="{fmt12(vmin)}" x2="0" y2="{fmt12(vmax)}" '
            f'stroke="#bbbbbb" stroke-width="{axis_w}"/>'
        )
    for quad, style in doc.cycles:
        out.extend(_cycle_elements(quad, style, doc, stroke_w, dot_r))
    for u, v in doc.points:
        out.append(
            f'<circle cx="{fmt12(u)}" cy="{fmt12(v)}" r="{fmt12(1.25 * dot_r)}" '
            f'fill="#222222" stroke="none"/>'
        )
    for extra in extras or []:
        out.append(extra)
    out.append("</g>")
    for u, v, text in annotations or []:
        out.append(
            f'<text x="{fmt12(u)}" y="{fmt12(flip - v)}" font-family="sans-serif" '
            f'font-size="{fmt12(14 * unit)}" fill="#333333">{text}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _stroke_attrs(style: CycleStyle, stroke_w: float) -> str:
    dash = ' stroke-dasharray="6 4"' if style.dash else ""
    return (
        f'fill="none" stroke="{style.stroke}" stroke-width="{fmt12(stroke_w)}"{dash}'
    )


def _cycle_elements(
    quad: CycleQuadruple,
    style: CycleStyle,
    doc: CycleSetDocument,
    stroke_w: float,
    dot_r: float,
) -> list[str]:
    if quad.is_degenerate():
        raise Degenerate("quadruple (0,0,0,m) has no locus to draw")
    sigma = doc.sigma
    k = float(quad.k)
    l = float(quad.l)
    n = float(quad.n)
    m = float(quad.m)
    attrs = _stroke_attrs(style, stroke_w)
    elements: list[str] = []
    zero_radius = k != 0 and float(radius_sq(quad, FSCcContext(sigma, 1))) == 0.0
    if zero_radius:
        spot = centre(quad, sigma)
        elements.append(
            f'<circle cx="{fmt12(float(spot.u))}" cy="{fmt12(float(spot.v))}" '
            f'r="{fmt12(dot_r)}" fill="{style.stroke}" stroke="none"/>'
        )
        if sigma == SpaceSign.ELLIPTIC:
            return elements
    if k == 0:
        elements.extend(_line_elements(l, n, m, doc, attrs))
        return elements
    if sigma == SpaceSign.ELLIPTIC:
        r_sq = float(radius_sq(quad, FSCcContext(SpaceSign.ELLIPTIC, 1)))
        if r_sq < 0:
            elements.append("<!-- empty elliptic locus -->")
            return elements
        if r_sq > 0:
            c = centre(quad, SpaceSign.ELLIPTIC)
            elements.append(
                f'<circle cx="{fmt12(float(c.u))}" cy="{fmt12(float(c.v))}" '
                f'r="{fmt12(math.sqrt(r_sq))}" {attrs}/>'
            )
        return elements
    if sigma == SpaceSign.PARABOLIC:
        if n == 0:
            # vertical line pair at the real roots, if any
            disc = l * l - k * m
            if disc < 0:
                elements.append("<!-- empty parabolic locus -->")
                return elements
            for sgn in ((-1.0, 1.0) if disc > 0 else (0.0,)):
                u0 = (l + sgn * math.sqrt(disc)) / k
                elements.append(_vertical_line(u0, doc, attrs))
            return elements
        elements.append(_parabola_bezier(k, l, n, m, doc, attrs))
        return elements
    elements.extend(_hyperbola_polylines(k, l, n, m, doc, attrs))
    return elements


def _vertical_line(u0: float, doc: CycleSetDocument, attrs: str) -> str:
    _, _, vmin, vmax = doc.viewport
    return (
        f'<line x1="{fmt12(u0)}" y1="{fmt12(vmin)}" x2="{fmt12(u0)}" '
        f'y2="{fmt12(vmax)}" {attrs}/>'
    )


def _line_elements(l: float, n: float, m: float, doc: CycleSetDocument, attrs: str) -> list[str]:
    umin, umax, vmin, vmax = doc.viewport
    if n == 0:
        if l == 0:
            raise Degenerate("line with l = n = 0 has no locus")
        return [_vertical_line(m / (2.0 * l), doc, attrs)]
    v0 = (m - 2.0 * l * umin) / (2.0 * n)
    v1 = (m - 2.0 * l * umax) / (2.0 * n)
    return [
        f'<line x1="{fmt12(umin)}" y1="{fmt12(v0)}" x2="{fmt12(umax)}" '
        f'y2="{fmt12(v1)}" {attrs}/>'
    ]


def _parabola_bezier(
    k: float, l: float, n: float, m: float, doc: CycleSetDocument, attrs: str
) -> str:
    umin, umax, _, _ = doc.viewport

    def f(u: float) -> float:
        return (k * u * u - 2.0 * l * u + m) / (2.0 * n)

    def fprime(u: float) -> float:
        return (k * u - l) / n

    u0, u1 = umin, umax
    p0 = (u0, f(u0))
    p2 = (u1, f(u1))
    # control point: intersection of the end tangents
    pc = ((u0 + u1) / 2.0, f(u0) + fprime(u0) * (u1 - u0) / 2.0)
    d = (
        f"M {fmt12(p0[0])} {fmt12(p0[1])} "
        f"Q {fmt12(pc[0])} {fmt12(pc[1])} {fmt12(p2[0])} {fmt12(p2[1])}"
    )
    return f'<path d="{d}" {attrs}/>'


def _hyperbola_polylines(
    k: float, l: float, n: float, m: float, doc: CycleSetDocument, attrs: str
) -> list[str]:
    umin, umax, vmin, vmax = doc.viewport
    span = vmax - vmin

    def disc_at(u: float) -> float:
        return n * n + k * (k * u * u - 2.0 * l * u + m)

    # locate the contiguous u-intervals where the branches are real
    scan = 1024
    feasible = [umin + (umax - umin) * i / (scan - 1) for i in range(scan)]
    intervals: list[tuple[float, float]] = []
    start = None
    for u in feasible:
        if disc_at(u) >= 0:
            if start is None:
                start = u
            end = u
        elif start is not None:
            intervals.append((start, end))
            start = None
    if start is not None:
        intervals.append((start, end))

    elements = []
    for branch in (1.0, -1.0):
        for ua, ub in intervals:
            if ub <= ua:
                continue
            run: list[tuple[float, float]] = []
            for i in range(HYPERBOLA_SAMPLES):
                u = ua + (ub - ua) * i / (HYPERBOLA_SAMPLES - 1)
                disc = disc_at(u)
                if disc < 0:
                    continue
                v = (-n + branch * math.sqrt(disc)) / k
                if vmin - span <= v <= vmax + span:
                    run.append((u, v))
            if len(run) < 2:
                continue
            pts = " ".join(f"{fmt12(u)},{fmt12(v)}" for u, v in run)
            elements.append(f'<polyline points="{pts}" {attrs}/>')
    if not elements:
        elements.append("<!-- empty hyperbolic locus -->")
    return elements


