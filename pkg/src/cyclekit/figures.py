"""Figure recipes: each emits one SVG file per panel into a directory.

The constructions mirror the library's showcase scenes: rotation orbits
with traversal curves, one quadruple drawn in all three plane styles
with its centres and foci, the 3x3 grid of zero-radius realisations,
orthogonality and s-orthogonality pencils with their ghost cycles, and
the distance/length constructions.  Colours and dashes are house style;
the geometry behind every panel is computed by the library, never
hand-placed.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

from .cycle import CycleQuadruple, FSCcContext, centre, focus
from .errors import UsageError
from .hypercomplex import SpaceSign
from .moebius import INFINITY, Point, k_orbit, subgroup_element
from .numbers import fmt12
from .relations import common_inverse_point, ghost_cycle, orthogonal_family, s_ghost
from .cycle import similarity_transform
from .svgout import CANVAS_PX, CycleSetDocument, CycleStyle, render_svg

RECIPE_NAMES = (
    "fig-k-orbits",
    "fig-eph-cycle",
    "fig-zero-radius",
    "fig-ortho1",
    "fig-ortho2",
    "fig-distances",
)

RED = "#c62828"
BLUE = "#1f4e9c"
GREEN = "#2e7d32"
GREY = "#888888"
ORANGE = "#e07b00"

_SIGNS = (SpaceSign.ELLIPTIC, SpaceSign.PARABOLIC, SpaceSign.HYPERBOLIC)


@dataclass(frozen=True)
class FigureRecipe:
    """A named figure with optional name=value parameter overrides."""

    name: str
    parameters: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        if self.name not in RECIPE_NAMES:
            raise UsageError(
                f"unknown figure {self.name!r}; choose from {', '.join(RECIPE_NAMES)}"
            )
        known = {"cycle", "b", "point"}
        for key in self.parameters:
            if key not in known:
                raise UsageError(f"unknown figure parameter {key!r}")


def run_figure(recipe: FigureRecipe, out_dir: str) -> list[str]:
    """Render every panel of the recipe; returns the file paths written."""
    os.makedirs(out_dir, exist_ok=True)
    builder = {
        "fig-k-orbits": _fig_k_orbits,
        "fig-eph-cycle": _fig_eph_cycle,
        "fig-zero-radius": _fig_zero_radius,
        "fig-ortho1": _fig_ortho1,
        "fig-ortho2": _fig_ortho2,
        "fig-distances": _fig_distances,
    }[recipe.name]
    paths = []
    for panel_name, text in builder(recipe.parameters):
        path = os.path.join(out_dir, f"{recipe.name}-{panel_name}.svg")
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        paths.append(path)
    return paths


def _param_quadruple(params: dict[str, str], key: str, default: CycleQuadruple) -> CycleQuadruple:
    if key not in params:
        return default
    parts = [float(x) for x in params[key].split(",")]
    if len(parts) != 4:
        raise UsageError(f"parameter {key!r} needs k,l,n,m")
    return CycleQuadruple(*parts)


def _param_point(params: dict[str, str], key: str, default: tuple[float, float]) -> tuple[float, float]:
    if key not in params:
        return default
    parts = [float(x) for x in params[key].split(",")]
    if len(parts) != 2:
        raise UsageError(f"parameter {key!r} needs u,v")
    return (parts[0], parts[1])


def _extra_dot(point, colour: str, viewport, scale: float = 3.0) -> str:
    u = float(point.u if isinstance(point, Point) else point[0])
    v = float(point.v if isinstance(point, Point) else point[1])
    r = scale * (viewport[1] - viewport[0]) / CANVAS_PX
    return (
        f'<circle cx="{fmt12(u)}" cy="{fmt12(v)}" r="{fmt12(r)}" '
        f'fill="{colour}" stroke="none"/>'
    )


def _orbit_parameters(samples: int = 257) -> list[float]:
    # tangent half-angle grid covering the whole rotation group once
    params = []
    for i in range(samples):
        phi = -math.pi + 2.0 * math.pi * (i + 0.5) / samples
        params.append(math.tan(phi / 2.0))
    return params


def _polyline_runs(points, viewport) -> list[str]:
    umin, umax, vmin, vmax = viewport
    span_u = umax - umin
    span_v = vmax - vmin
    runs: list[list[tuple[float, float]]] = [[]]
    for pt in points:
        if pt is INFINITY:
            if runs[-1]:
                runs.append([])
            continue
        u, v = float(pt.u), float(pt.v)
        if not (umin - span_u < u < umax + span_u and vmin - span_v < v < vmax + span_v):
            if runs[-1]:
                runs.append([])
            continue
        runs[-1].append((u, v))
    return [run for run in runs if len(run) >= 2]


def _fig_k_orbits(params: dict[str, str]):
    viewport = (-3.0, 3.0, -3.0, 3.0)
    ts = _orbit_parameters()
    traversal_ts = [math.tan(phi / 2.0) for phi in (-1.2, -0.8, -0.4, 0.4, 0.8, 1.2)]
    panels = []
    for sigma in _SIGNS:
        cycles = []
        extras = []
        for t in traversal_ts:
            axis_image = similarity_transform(
                CycleQuadruple(0.0, 1.0, 0.0, 0.0),
                subgroup_element("K", t),
                FSCcContext(sigma, 1),
            )
            cycles.append((axis_image, CycleStyle(stroke=GREY)))
        for v0 in (0.5, 1.0, 2.0):
            orbit_pts = k_orbit(Point(0.0, v0), sigma, ts)
            for run in _polyline_runs(orbit_pts, viewport):
                pts = " ".join(f"{fmt12(u)},{fmt12(v)}" for u, v in run)
                extras.append(
                    f'<polyline points="{pts}" fill="none" stroke="{BLUE}" '
                    f'stroke-width="{fmt12(2.0 * 6.0 / CANVAS_PX)}"/>'
                )
        doc = CycleSetDocument(sigma, cycles, [], viewport)
        comments = [f"rotation orbits in the {sigma.letter}-plane"]
        panels.append((sigma.letter, render_svg(doc, comments, extras)))
    return panels


def _fig_eph_cycle(params: dict[str, str]):
    quad = _param_quadruple(params, "cycle", CycleQuadruple(2.0, 1.0, 2.0, 1.0))
    viewport = (-3.0, 4.0, -3.0, 3.0)
    panels = []
    for sigma in _SIGNS:
        doc = CycleSetDocument(sigma, [(quad, CycleStyle(stroke=BLUE))], [], viewport)
        extras = []
        for kind, colour in zip(_SIGNS, (RED, ORANGE, GREEN)):
            spot = centre(quad, kind)
            if spot is not INFINITY:
                extras.append(_extra_dot(spot, colour, viewport))
            try:
                f = focus(quad, kind)
                extras.append(_extra_dot(f, colour, viewport, scale=2.0))
            except Exception:
                pass
        comments = [f"one quadruple drawn {sigma.letter}-style with centres and foci"]
        panels.append((sigma.letter, render_svg(doc, comments, extras)))
    return panels


def _fig_zero_radius(params: dict[str, str]):
    from .cycle import zero_radius_cycle

    at = _param_point(params, "point", (0.5, 1.0))
    viewport = (-2.0, 3.0, -2.0, 3.0)
    panels = []
    for sigma_cycle in _SIGNS:
        quad = zero_radius_cycle(at, FSCcContext(sigma_cycle, 1))
        for sigma in _SIGNS:
            doc = CycleSetDocument(sigma, [(quad, CycleStyle(stroke=BLUE))], [], viewport)
            extras = []
            try:
                extras.append(_extra_dot(focus(quad, sigma_cycle), ORANGE, viewport, 2.0))
            except Exception:
                pass
            comments = [
                f"zero-radius for the {sigma_cycle.letter}-cycle-space drawn {sigma.letter}-style"
            ]
            panels.append(
                (f"{sigma_cycle.letter}{sigma.letter}", render_svg(doc, comments, extras))
            )
    return panels


def _fig_ortho1(params: dict[str, str]):
    red = _param_quadruple(params, "cycle", CycleQuadruple(1.0, 0.0, 1.0, 0.0))
    b = _param_point(params, "b", (1.0, 1.0))
    second = (-1.2, 0.6)
    viewport = (-3.0, 3.0, -3.0, 3.0)
    sigma = SpaceSign.ELLIPTIC
    panels = []
    for sigma_cycle in _SIGNS:
        ctx = FSCcContext(sigma_cycle, 1)
        cycles = [(red, CycleStyle(stroke=RED))]
        comments = [f"pencils orthogonal to the red cycle, cycle-space {sigma_cycle.letter}"]
        for member in orthogonal_family(red, b, ctx, 5, sigma):
            cycles.append((member, CycleStyle(stroke=BLUE)))
        for member in orthogonal_family(red, second, ctx, 4, sigma):
            cycles.append((member, CycleStyle(stroke=GREEN)))
        ghost = ghost_cycle(red, sigma, sigma_cycle)
        cycles.append((ghost, CycleStyle(stroke=RED, dash=True)))
        extras = [_extra_dot(b, "#222222", viewport)]
        d = common_inverse_point(red, b, sigma, sigma_cycle)
        if d is not INFINITY:
            extras.append(_extra_dot(d, ORANGE, viewport))
        panels.append((sigma_cycle.letter, render_svg(
            CycleSetDocument(sigma, cycles, [], viewport), comments, extras
        )))
    return panels


def _fig_ortho2(params: dict[str, str]):
    red = _param_quadruple(params, "cycle", CycleQuadruple(1.0, 0.0, 1.0, 0.0))
    b = _param_point(params, "b", (1.0, 1.0))
    viewport = (-3.0, 3.0, -3.0, 3.0)
    sigma = SpaceSign.ELLIPTIC
    panels = []
    for sigma_cycle in _SIGNS:
        comments = [
            f"pencils s-orthogonal to the red cycle, cycle-space {sigma_cycle.letter}"
        ]
        if sigma_cycle == SpaceSign.PARABOLIC:
            doc = CycleSetDocument(sigma, [(red, CycleStyle(stroke=RED))], [], viewport)
            comments.append(
                "degenerate panel: every cycle is s-orthogonal in the parabolic cycle space"
            )
            text = render_svg(
                doc,
                comments,
                [_extra_dot(b, "#222222", viewport)],
                annotations=[(-2.8, -2.6, "s-orthogonality is degenerate here")],
            )
            panels.append((sigma_cycle.letter, text))
            continue
        ctx = FSCcContext(sigma_cycle, 1)
        ghost = s_ghost(red, sigma, sigma_cycle)
        cycles = [(red, CycleStyle(stroke=RED))]
        for member in orthogonal_family(ghost, b, ctx, 5, sigma):
            cycles.append((member, CycleStyle(stroke=BLUE)))
        for member in orthogonal_family(ghost, (-1.2, 0.6), ctx, 4, sigma):
            cycles.append((member, CycleStyle(stroke=GREEN)))
        cycles.append((ghost, CycleStyle(stroke=RED, dash=True)))
        extras = [_extra_dot(b, "#222222", viewport)]
        d = common_inverse_point(ghost, b, sigma, sigma_cycle)
        if d is not INFINITY:
            extras.append(_extra_dot(d, ORANGE, viewport))
        panels.append((sigma_cycle.letter, render_svg(
            CycleSetDocument(sigma, cycles, [], viewport), comments, extras
        )))
    return panels


def _fig_distances(params: dict[str, str]):
    panels = []
    # (a) parabolic diameter vs real/adjoint roots
    viewport = (-3.0, 3.0, -2.0, 4.0)
    with_roots = CycleQuadruple(1.0, 0.0, 1.0, -3.0)
    without_roots = CycleQuadruple(1.0, 0.0, 1.0, 3.0)
    doc = CycleSetDocument(
        SpaceSign.PARABOLIC,
        [
            (with_roots, CycleStyle(stroke=BLUE)),
            (without_roots, CycleStyle(stroke=GREEN, dash=True)),
        ],
        [],
        viewport,
    )
    root = math.sqrt(3.0)
    extras = [
        _extra_dot((-root, 0.0), BLUE, viewport),
        _extra_dot((root, 0.0), BLUE, viewport),
        f'<line x1="{fmt12(-root)}" y1="0" x2="{fmt12(root)}" y2="0" '
        f'stroke="{ORANGE}" stroke-width="{fmt12(2.5 * 6.0 / CANVAS_PX)}"/>',
    ]
    comments = ["parabolic diameter equals the gap between real roots"]
    panels.append(("a", render_svg(doc, comments, extras)))

    # (b) distance between two points as the extremal diameter
    viewport = (-3.0, 3.0, -2.0, 4.0)
    a_pt, b_pt = (-1.0, 1.0), (1.0, 2.0)
    cycles = []
    mid = ((a_pt[0] + b_pt[0]) / 2.0, (a_pt[1] + b_pt[1]) / 2.0)
    chord = (b_pt[0] - a_pt[0], b_pt[1] - a_pt[1])
    chord_len = math.hypot(*chord)
    normal = (-chord[1] / chord_len, chord[0] / chord_len)
    for offset in (-1.5, -0.75, 0.75, 1.5):
        c = (mid[0] + offset * normal[0], mid[1] + offset * normal[1])
        r_sq = (a_pt[0] - c[0]) ** 2 + (a_pt[1] - c[1]) ** 2
        member = CycleQuadruple(1.0, c[0], c[1], c[0] ** 2 + c[1] ** 2 - r_sq)
        cycles.append((member, CycleStyle(stroke=GREY)))
    extremal = CycleQuadruple(
        1.0, mid[0], mid[1], mid[0] ** 2 + mid[1] ** 2 - (chord_len / 2.0) ** 2
    )
    cycles.append((extremal, CycleStyle(stroke=RED)))
    doc = CycleSetDocument(SpaceSign.ELLIPTIC, cycles, [a_pt, b_pt], viewport)
    comments = ["the minimal diameter over the pencil through both points"]
    panels.append(("b", render_svg(doc, comments)))

    # (c) perpendicular as the shortest route from a point to a line
    viewport = (-3.0, 3.0, -2.0, 4.0)
    apex = (0.0, 2.5)
    line_quad = CycleQuadruple(0.0, -0.5, 1.0, -1.0)  # v = u/2 - 1/2
    base = (0.0, -0.5)
    direction = (1.0, 0.5)
    norm_sq = direction[0] ** 2 + direction[1] ** 2
    t_foot = (
        (apex[0] - base[0]) * direction[0] + (apex[1] - base[1]) * direction[1]
    ) / norm_sq
    foot = (base[0] + t_foot * direction[0], base[1] + t_foot * direction[1])
    reach = math.hypot(apex[0] - foot[0], apex[1] - foot[1])
    cycles = [(line_quad, CycleStyle(stroke=BLUE))]
    for r in (0.4 * reach, 0.7 * reach):
        ring = CycleQuadruple(1.0, apex[0], apex[1], apex[0] ** 2 + apex[1] ** 2 - r * r)
        cycles.append((ring, CycleStyle(stroke=GREY, dash=True)))
    touching = CycleQuadruple(
        1.0, apex[0], apex[1], apex[0] ** 2 + apex[1] ** 2 - reach * reach
    )
    cycles.append((touching, CycleStyle(stroke=RED)))
    extras = [
        f'<line x1="{fmt12(apex[0])}" y1="{fmt12(apex[1])}" x2="{fmt12(foot[0])}" '
        f'y2="{fmt12(foot[1])}" stroke="{ORANGE}" '
        f'stroke-width="{fmt12(2.5 * 6.0 / CANVAS_PX)}"/>',
        _extra_dot(foot, ORANGE, viewport),
    ]
    doc = CycleSetDocument(SpaceSign.ELLIPTIC, cycles, [apex], viewport)
    comments = ["shortest route to a line along the perpendicular"]
    panels.append(("c", render_svg(doc, comments, extras)))
    return panels
