"""Distances, lengths from centre and focus, perpendicularity, conformality.

The squared distance u^2 - sigma*v^2 may be negative in the hyperbolic
plane and is returned as-is.  Lengths are squared radii of cycles
anchored at the start of a directed interval, so reversing an interval
can change the answer.  Perpendicularity is a local-extremum statement
probed with symmetric finite differences.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .cycle import (
    CycleQuadruple,
    FSCcContext,
    HasFocus,
    HasKindCentre,
    Normalised,
    PassesThrough,
    _gauss_solve,
    cycle_from_constraints,
    radius_sq,
)
from .errors import (
    BranchInstability,
    CycleKitError,
    DegenerateFocalPoint,
    ExperimentalRegimeWarning,
    Inconsistent,
)
from .hypercomplex import HNumber, SpaceSign, h_conj_modsq
from .moebius import GroupElement, Point, mobius_apply
from .numbers import Scalar


@dataclass(frozen=True)
class DirectedInterval:
    """Ordered pair of finite points; reversal is a different interval."""

    a: tuple[Scalar, Scalar]
    b: tuple[Scalar, Scalar]

    def reversed(self) -> "DirectedInterval":
        return DirectedInterval(self.b, self.a)


@dataclass(frozen=True)
class Distance:
    sigma: SpaceSign


@dataclass(frozen=True)
class FromCentre:
    sigma: SpaceSign
    sigma_cycle: SpaceSign


@dataclass(frozen=True)
class FromFocus:
    sigma: SpaceSign
    sigma_cycle: SpaceSign


LengthKind = Distance | FromCentre | FromFocus


def distance_sq(
    a: tuple[Scalar, Scalar], b: tuple[Scalar, Scalar], sigma: SpaceSign
) -> Scalar:
    """u^2 - sigma*v^2 of the difference; negative values possible for sigma=1."""
    du = b[0] - a[0]
    dv = b[1] - a[1]
    return h_conj_modsq(HNumber(du, dv, sigma))[1]


def variational_distance_oracle(
    a: tuple[Scalar, Scalar],
    b: tuple[Scalar, Scalar],
    sigma: SpaceSign,
    sigma_cycle: SpaceSign,
) -> float:
    """Extremal squared diameter over all cycles through both points.

    Golden-section search over the one-parameter pencil through the two
    points, independent of the closed-form distance.  Supported for the
    elliptic/elliptic regime; other regimes are attempted with a warning.
    """
    if not (sigma == SpaceSign.ELLIPTIC and sigma_cycle == SpaceSign.ELLIPTIC):
        warnings.warn(
            "variational distance outside the elliptic regime is experimental",
            ExperimentalRegimeWarning,
            stacklevel=2,
        )
    au, av = float(a[0]), float(a[1])
    bu, bv = float(b[0]), float(b[1])
    sig = int(sigma)
    rows = [
        [au * au - sig * av * av, -2 * au, -2 * av, 1],
        [bu * bu - sig * bv * bv, -2 * bu, -2 * bv, 1],
        [1.0, 0.0, 0.0, 0.0],
    ]
    solved = _gauss_solve(rows, [0.0, 0.0, 1.0], exact=False)
    if solved is None:
        raise Inconsistent("no cycle pencil through the two points")
    base, basis = solved
    if len(basis) != 1:
        raise Inconsistent("point pair does not define a one-parameter pencil")
    direction = basis[0]
    ctx = FSCcContext(sigma_cycle, 1)

    def diameter_sq(t: float) -> float:
        quad = CycleQuadruple(*(x + t * y for x, y in zip(base, direction)))
        return 4.0 * float(radius_sq(quad, ctx))

    # Bracket the extremum on an exponential grid (the pencil parameter
    # scale is arbitrary), then refine by golden section.
    candidates = [0.0]
    for k in range(-8, 30):
        candidates.append(2.0**k / 16.0)
        candidates.append(-(2.0**k) / 16.0)
    best_t = min(candidates, key=diameter_sq)
    width = max(abs(best_t), 1.0)
    lo, hi = best_t - width, best_t + width
    phi = (math.sqrt(5.0) - 1.0) / 2.0
    x1 = hi - phi * (hi - lo)
    x2 = lo + phi * (hi - lo)
    f1, f2 = diameter_sq(x1), diameter_sq(x2)
    for _ in range(300):
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - phi * (hi - lo)
            f1 = diameter_sq(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + phi * (hi - lo)
            f2 = diameter_sq(x2)
        if hi - lo < 1e-12 * max(1.0, abs(best_t)):
            break
    return diameter_sq((lo + hi) / 2.0)


def length(interval: DirectedInterval, kind: LengthKind) -> list[Scalar]:
    """Squared lengths of the interval, all real branches ascending.

    Distance has one value; from-centre solves for the unique cycle with
    the prescribed centre through the endpoint; from-focus may have two
    branches, and degenerates to zero-radius cycles when the start lies
    on the real axis.
    """
    if isinstance(kind, Distance):
        return [distance_sq(interval.a, interval.b, kind.sigma)]
    if isinstance(kind, FromCentre):
        cycles = cycle_from_constraints(
            [
                HasKindCentre(interval.a, kind.sigma_cycle),
                PassesThrough(interval.b, kind.sigma),
                Normalised(),
            ]
        )
    elif isinstance(kind, FromFocus):
        if interval.a[1] == 0:
            raise DegenerateFocalPoint(
                "every cycle with a real-axis focus through another point is zero-radius"
            )
        cycles = cycle_from_constraints(
            [
                HasFocus(interval.a, kind.sigma_cycle),
                PassesThrough(interval.b, kind.sigma),
                Normalised(),
            ]
        )
    else:
        raise TypeError(f"unknown length kind {kind!r}")
    ctx = FSCcContext(kind.sigma_cycle, 1)
    values = [radius_sq(c, ctx) for c in cycles]
    return sorted(values, key=float)


def _first_branch(interval: DirectedInterval, kind: LengthKind) -> tuple[float, int]:
    values = length(interval, kind)
    return float(values[0]), len(values)


def is_perpendicular(
    interval: DirectedInterval,
    direction: tuple[Scalar, Scalar],
    kind: LengthKind,
    h: float = 1e-5,
    tol: float = 1e-9,
) -> bool:
    """Local extremum of the first length branch under endpoint shifts.

    Probes eps -> length(A -> B + eps*direction) at +-h: the symmetric
    difference must vanish within tol and the second difference must
    show genuine curvature (a flat function counts as an extremum).
    """
    du, dv = float(direction[0]), float(direction[1])
    if du == 0 and dv == 0:
        raise ValueError("direction must be nonzero")
    a = (float(interval.a[0]), float(interval.a[1]))
    bu, bv = float(interval.b[0]), float(interval.b[1])

    def probe(eps: float) -> tuple[float, int]:
        moved = DirectedInterval(a, (bu + eps * du, bv + eps * dv))
        try:
            return _first_branch(moved, kind)
        except (Inconsistent, DegenerateFocalPoint) as exc:
            raise BranchInstability(f"length branch vanished at eps={eps}") from exc

    f_minus, n_minus = probe(-h)
    f_zero, n_zero = probe(0.0)
    f_plus, n_plus = probe(h)
    if not (n_minus == n_zero == n_plus):
        raise BranchInstability("branch count changed inside the probing window")
    scale = max(1.0, abs(f_minus), abs(f_zero), abs(f_plus))
    symmetric = abs(f_plus - f_minus) / (2.0 * h)
    if symmetric > tol * scale:
        return False
    second = f_plus + f_minus - 2.0 * f_zero
    curved = abs(second) > 1e-13 * scale
    flat = abs(f_plus - f_zero) <= 1e-12 * scale and abs(f_minus - f_zero) <= 1e-12 * scale
    return curved or flat


def conformality_ratios(
    g: GroupElement,
    y: tuple[Scalar, Scalar],
    dirs: list[tuple[Scalar, Scalar]],
    t: float,
    kind: LengthKind,
) -> list[float]:
    """length(g y -> g(y + t y')) / length(y -> y + t y') per direction.

    Ratios of first branches, square-rooted; for a Moebius-conformal
    length the spread across directions vanishes as t -> 0.
    """
    sigma = kind.sigma
    base = Point(float(y[0]), float(y[1]))
    image = mobius_apply(g, base, sigma)
    if not isinstance(image, Point):
        raise CycleKitError("base point maps to INFINITY")
    ratios = []
    for direction in dirs:
        shifted = Point(base.u + t * float(direction[0]), base.v + t * float(direction[1]))
        shifted_image = mobius_apply(g, shifted, sigma)
        if not isinstance(shifted_image, Point):
            raise CycleKitError("shifted point maps to INFINITY")
        denom, _ = _first_branch(
            DirectedInterval((base.u, base.v), (shifted.u, shifted.v)), kind
        )
        numer, _ = _first_branch(
            DirectedInterval((image.u, image.v), (shifted_image.u, shifted_image.v)),
            kind,
        )
        if denom == 0:
            raise CycleKitError("degenerate direction: zero base length")
        quotient = numer / denom
        if quotient < 0:
            raise CycleKitError("length quotient changed sign; null direction hit")
        ratios.append(math.sqrt(quotient))
    return ratios
