"""SL(2,R) and its fractional-linear action on the three planes.

A group element acts on z = u + iv by z -> (az+b)/(cz+d), computed in
the arithmetic selected by the point-space sign.  All three planes are
compactified by a single point INFINITY; denominators whose modulus
vanishes map there.  The dilation/shift/rotation factorisation keeps a
rational parametrisation of the rotation subgroup so exact mode never
needs trigonometry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ExactModeError, NotAKOrbit
from .hypercomplex import HNumber, SpaceSign, h_inv, h_mul, h_real
from .numbers import Scalar, div, is_exact, scalar_sqrt, sqrt_exact


class _Infinity:
    """The single point compactifying all three planes."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"


INFINITY = _Infinity()


@dataclass(frozen=True)
class Point:
    """Finite point (u, v) of a plane."""

    u: Scalar
    v: Scalar

    def __iter__(self):
        return iter((self.u, self.v))


PointOrInfinity = Point | _Infinity


@dataclass(frozen=True)
class GroupElement:
    """Real 2x2 matrix, normalised to determinant one on construction.

    Construction accepts any matrix with positive determinant and divides
    by the positive square root; in exact mode the determinant must be a
    perfect rational square.
    """

    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar

    def __post_init__(self):
        det = self.a * self.d - self.b * self.c
        if det <= 0:
            raise ValueError(f"determinant must be positive, got {det}")
        if det != 1:
            root = scalar_sqrt(det, "group element normalisation")
            for name in ("a", "b", "c", "d"):
                object.__setattr__(self, name, div(getattr(self, name), root))

    def entries(self) -> tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.a, self.b, self.c, self.d)

    @classmethod
    def identity(cls, exact: bool = True) -> "GroupElement":
        one = 1 if exact else 1.0
        zero = 0 if exact else 0.0
        return cls(one, zero, zero, one)


@dataclass(frozen=True)
class IwasawaFactors:
    """Dilation alpha, shift nu, rotation (cos_phi, sin_phi)."""

    alpha: Scalar
    nu: Scalar
    cos_phi: Scalar
    sin_phi: Scalar


def compose(g1: GroupElement, g2: GroupElement) -> GroupElement:
    return GroupElement(
        g1.a * g2.a + g1.b * g2.c,
        g1.a * g2.b + g1.b * g2.d,
        g1.c * g2.a + g1.d * g2.c,
        g1.c * g2.b + g1.d * g2.d,
    )


def invert(g: GroupElement) -> GroupElement:
    return GroupElement(g.d, -g.b, -g.c, g.a)


def mobius_apply(g: GroupElement, z: PointOrInfinity, sigma: SpaceSign) -> PointOrInfinity:
    """Apply (az+b)/(cz+d) in the sigma-arithmetic; total via INFINITY."""
    if z is INFINITY:
        if g.c == 0:
            return INFINITY
        return Point(div(g.a, g.c), 0 if is_exact(g.a, g.c) else 0.0)
    w = HNumber(z.u, z.v, sigma)
    num = h_real(g.a, sigma) * w + h_real(g.b, sigma)
    den = h_real(g.c, sigma) * w + h_real(g.d, sigma)
    if den.modsq() == 0:
        return INFINITY
    image = h_mul(num, h_inv(den))
    return Point(image.re, image.im)


def subgroup_element(kind: str, param: Scalar) -> GroupElement:
    """One-parameter subgroup elements.

    A(t) = diag(t, 1/t) with t > 0; N(t) is the shift by t; K(t) uses the
    tangent-half-angle point (cos, sin) = ((1-t^2)/(1+t^2), 2t/(1+t^2)),
    so rotations stay rational in exact mode.
    """
    if kind == "A":
        if param <= 0:
            raise ValueError("dilation parameter must be positive")
        return GroupElement(param, 0, 0, div(1, param))
    if kind == "N":
        zero = 0.0 if isinstance(param, float) else 0
        one = 1.0 if isinstance(param, float) else 1
        return GroupElement(one, param, zero, one)
    if kind == "K":
        denom = 1 + param * param
        cos = div(1 - param * param, denom)
        sin = div(2 * param, denom)
        return GroupElement(cos, sin, -sin, cos)
    raise ValueError(f"unknown subgroup kind {kind!r}")


def rotation_from_cos_sin(cos_phi: Scalar, sin_phi: Scalar) -> GroupElement:
    """Rotation matrix from a point of the unit circle (used by recomposition)."""
    return GroupElement(cos_phi, sin_phi, -sin_phi, cos_phi)


def iwasawa_decompose(g: GroupElement) -> IwasawaFactors:
    """Factor g = A(alpha) N(nu) K(cos,sin).

    The rotation and alpha depend on the bottom row only; exact mode
    requires c*c + d*d to be a perfect rational square.
    """
    a, b, c, d = g.entries()
    norm_sq = c * c + d * d
    if is_exact(a, b, c, d):
        root = sqrt_exact(Fraction(norm_sq))
        if root is None:
            raise ExactModeError(
                f"bottom row norm {norm_sq} is not a perfect rational square; use float mode"
            )
        alpha = div(1, root)
    else:
        alpha = 1.0 / math.sqrt(norm_sq)
    cos_phi = d * alpha
    sin_phi = -c * alpha
    nu = a * c + b * d
    return IwasawaFactors(alpha, nu, cos_phi, sin_phi)


def iwasawa_recompose(factors: IwasawaFactors) -> GroupElement:
    return compose(
        compose(subgroup_element("A", factors.alpha), subgroup_element("N", factors.nu)),
        rotation_from_cos_sin(factors.cos_phi, factors.sin_phi),
    )


def k_orbit(
    base: Point, sigma: SpaceSign, params: list[Scalar]
) -> list[PointOrInfinity]:
    """Images of a finite base point under rotations K(t), one per parameter."""
    return [mobius_apply(subgroup_element("K", t), base, sigma) for t in params]


def reduce_to_k_orbit(cycle, sigma_cycle: SpaceSign) -> tuple[Scalar, Scalar]:
    """Shift nu and dilation alpha moving a cycle onto a rotation orbit.

    Applying N(-nu) then A(alpha) through the similarity action yields a
    quadruple with l = 0 and k = m up to scale.  Cycles whose shifted
    m/k is not positive admit no such form.  The fourth root defining
    alpha falls back to a float when it is irrational.
    """
    if cycle.k == 0:
        raise NotAKOrbit("lines are not rotation orbits (k = 0)")
    nu = div(cycle.l, cycle.k)
    m_shifted = cycle.m - div(cycle.l * cycle.l, cycle.k)
    ratio = div(cycle.k, m_shifted) if m_shifted != 0 else None
    if ratio is None or ratio <= 0:
        raise NotAKOrbit(f"shifted m/k = {m_shifted}/{cycle.k} is not positive")
    if is_exact(ratio):
        half = sqrt_exact(Fraction(ratio))
        quarter = sqrt_exact(half) if half is not None else None
        alpha = quarter if quarter is not None else float(ratio) ** 0.25
    else:
        alpha = float(ratio) ** 0.25
    return nu, alpha
