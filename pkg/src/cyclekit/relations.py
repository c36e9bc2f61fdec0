"""Joint invariants of cycle pairs.

The trace pairing conjugates its second factor before multiplying, so
it is real-valued and reproduces tangent-line orthogonality whenever
both signs are elliptic (or both hyperbolic).  Its vanishing, not its
value, is the Moebius-invariant notion.  Ghost cycles reduce the
sign-twisted orthogonalities to the usual one; reflections implement
cycle-in-cycle mirroring, with a conjugated variant for the classical
point inversion.
"""

from __future__ import annotations

import warnings

from .cycle import (
    CycleQuadruple,
    FSCcContext,
    REAL_LINE,
    _fscc_entries,
    _gauss_solve,
    _mat_mul,
    _quadruple_from_entries,
    centre,
    normalized_key,
    zero_radius_cycle,
)
from .errors import (
    Degenerate,
    DegenerateReflection,
    DegenerateRelationWarning,
    Inconsistent,
)
from .hypercomplex import SpaceSign
from .moebius import INFINITY, PointOrInfinity
from .numbers import Scalar, is_exact


def heaviside(t: Scalar) -> int:
    """+1 for t >= 0, -1 below; the sign selector of the ghost twists."""
    return 1 if t >= 0 else -1


def pairing(c1: CycleQuadruple, c2: CycleQuadruple, ctx: FSCcContext) -> Scalar:
    """Real part of trace(M1 * conj(M2)); symmetric and bilinear.

    Expanded: 2*l1*l2 - 2*sigma_cycle*s^2*n1*n2 - m1*k2 - k1*m2.  The
    self-pairing equals -2 det.
    """
    sig = int(ctx.sigma_cycle)
    s2 = ctx.s * ctx.s
    return (
        2 * c1.l * c2.l
        - 2 * sig * s2 * c1.n * c2.n
        - c1.m * c2.k
        - c1.k * c2.m
    )


def is_orthogonal(c1: CycleQuadruple, c2: CycleQuadruple, ctx: FSCcContext) -> bool:
    """Vanishing pairing; exact for exact inputs, tolerance-scaled otherwise."""
    value = pairing(c1, c2, ctx)
    if is_exact(*c1.components(), *c2.components()):
        return value == 0
    scale = max(1.0, *(abs(float(x)) for x in c1.components())) * max(
        1.0, *(abs(float(x)) for x in c2.components())
    )
    return abs(value) <= 1e-9 * scale


def ghost_cycle(
    cycle: CycleQuadruple, sigma: SpaceSign, sigma_cycle: SpaceSign
) -> CycleQuadruple:
    """(k, l, chi(sigma)*sigma_cycle*n, m).

    Shares the roots of the original, its chi(sigma)-centre sits at the
    sigma_cycle-centre of the original, and it converts sigma_cycle
    pairing against anything into chi(sigma) pairing exactly.
    """
    twist = heaviside(int(sigma)) * int(sigma_cycle)
    if cycle.k == 0 and cycle.l == 0 and cycle.m == 0 and twist == 0:
        raise Degenerate("ghost of the real line collapses in the parabolic cycle space")
    return CycleQuadruple(cycle.k, cycle.l, twist * cycle.n, cycle.m)


def reflect_cycle(
    mirror: CycleQuadruple,
    cycle: CycleQuadruple,
    ctx: FSCcContext,
    conjugate_argument: bool = True,
) -> CycleQuadruple:
    """Quadruple of M_mirror * conj(M_cycle) * M_mirror.

    Conjugating the reflected matrix (imaginary part negated) makes the
    map an involution up to scale and reproduces classical point
    inversion in the mirror; pass ``conjugate_argument=False`` for the
    raw triple product, whose imaginary part differs only in sign.  The
    product always keeps the cycle-matrix shape; a zero product raises
    DegenerateReflection.
    """
    mirror_m = _fscc_entries(mirror, ctx)
    inner = cycle
    if conjugate_argument:
        inner = CycleQuadruple(cycle.k, cycle.l, -cycle.n, cycle.m)
    inner_m = _fscc_entries(inner, ctx)
    product = _mat_mul(_mat_mul(mirror_m, inner_m), mirror_m)
    if all(e.is_zero() for e in product):
        raise DegenerateReflection("reflection collapsed to the zero matrix")
    return _quadruple_from_entries(product, ctx)


def invert_point(
    cycle: CycleQuadruple, b: tuple[Scalar, Scalar], ctx: FSCcContext
) -> PointOrInfinity:
    """Inverse of a point in a cycle: centre of the reflected point-cycle.

    In the elliptic case this reproduces classical circle inversion
    (points of the mirror are fixed); a reflected quadruple with k = 0
    means the image is INFINITY.
    """
    z_b = zero_radius_cycle(b, ctx)
    reflected = reflect_cycle(cycle, z_b, ctx)
    if reflected.k == 0:
        return INFINITY
    return centre(reflected, ctx.sigma_cycle)


def common_inverse_point(
    cycle: CycleQuadruple,
    b: tuple[Scalar, Scalar],
    sigma: SpaceSign,
    sigma_cycle: SpaceSign,
) -> PointOrInfinity:
    """Second common point of all cycles through b orthogonal to the cycle.

    Computed as classical inversion of b in the ghost cycle, carried out
    in the chi(sigma) algebra: the fixed locus of the twisted inversion
    is the ghost, not the cycle itself.
    """
    ghost = ghost_cycle(cycle, sigma, sigma_cycle)
    chi_ctx = FSCcContext(SpaceSign(heaviside(int(sigma))), 1)
    return invert_point(ghost, b, chi_ctx)


def _trace_of_quadruple_product(cycles, ctx: FSCcContext):
    entries = [_fscc_entries(c, ctx) for c in cycles]
    product = entries[0]
    for nxt in entries[1:]:
        product = _mat_mul(product, nxt)
    return product[0] + product[3]


def is_s_orthogonal(
    cycle: CycleQuadruple, other: CycleQuadruple, ctx: FSCcContext
) -> bool:
    """trace(C * C~ * C * R) = 0, all hypercomplex components.

    The relation is not symmetric.  In the parabolic cycle space the
    trace vanishes identically; the verdict is True with a diagnostic
    warning.
    """
    if ctx.sigma_cycle == SpaceSign.PARABOLIC:
        warnings.warn(
            "s-orthogonality degenerates for the parabolic cycle space",
            DegenerateRelationWarning,
            stacklevel=2,
        )
        return True
    trace = _trace_of_quadruple_product([cycle, other, cycle, REAL_LINE], ctx)
    if is_exact(trace.re, trace.im):
        return trace.is_zero()
    scale = max(1.0, *(abs(float(x)) for x in cycle.components())) ** 2 * max(
        1.0, *(abs(float(x)) for x in other.components())
    )
    return abs(trace.re) <= 1e-9 * scale and abs(trace.im) <= 1e-9 * scale


def s_ghost(
    cycle: CycleQuadruple, sigma: SpaceSign, sigma_cycle: SpaceSign
) -> CycleQuadruple:
    """Reflection of the real line in the cycle taken at s = chi(sigma).

    Read back at s = +1.  Shares the roots of the original for nonzero
    n; the construction collapses to the real line in the parabolic
    cycle space, which is rejected.
    """
    if sigma_cycle == SpaceSign.PARABOLIC:
        raise DegenerateReflection(
            "s-ghost collapses to the real line in the parabolic cycle space"
        )
    chi_ctx = FSCcContext(sigma_cycle, heaviside(int(sigma)))
    mirror_m = _fscc_entries(cycle, chi_ctx)
    line_m = _fscc_entries(REAL_LINE, chi_ctx)
    product = _mat_mul(_mat_mul(mirror_m, line_m), mirror_m)
    if all(e.is_zero() for e in product):
        raise DegenerateReflection("s-ghost collapsed to the zero matrix")
    return _quadruple_from_entries(product, FSCcContext(sigma_cycle, 1))


def orthogonal_family(
    cycle: CycleQuadruple,
    through: tuple[Scalar, Scalar],
    ctx: FSCcContext,
    count: int,
    sigma: SpaceSign = SpaceSign.ELLIPTIC,
) -> list[CycleQuadruple]:
    """Sample of the pencil of cycles orthogonal to one cycle through a point.

    The two linear conditions leave a projective line of solutions,
    sampled on a deterministic parameter grid until ``count`` distinct
    projective classes are collected.  ``sigma`` fixes the point space
    in which the incidence is read (the construction draws in the
    elliptic plane by default).
    """
    u, v = through
    sig_p = int(sigma)
    sig_c = int(ctx.sigma_cycle)
    rows = [
        [-cycle.m, 2 * cycle.l, -2 * sig_c * ctx.s * ctx.s * cycle.n, -cycle.k],
        [u * u - sig_p * v * v, -2 * u, -2 * v, 1],
    ]
    solved = _gauss_solve(rows, [0, 0], is_exact(u, v, *cycle.components()))
    if solved is None:
        raise Inconsistent("orthogonality and incidence admit no common cycle")
    _, basis = solved
    if len(basis) != 2:
        raise Inconsistent(
            f"expected a projective line of solutions, got dimension {len(basis) - 1}"
        )
    b0, b1 = basis
    family: list[CycleQuadruple] = []
    seen: set[tuple] = set()
    grid: list[tuple[Scalar, Scalar]] = [(1, 0), (0, 1)]
    step = 1
    while len(grid) < 4 * count + 8:
        grid.extend([(1, step), (1, -step), (step, 1), (-step, 1)])
        step += 1
    for alpha, beta in grid:
        values = [alpha * x + beta * y for x, y in zip(b0, b1)]
        if all(val == 0 for val in values):
            continue
        candidate = CycleQuadruple(*values)
        key = tuple(float(x) for x in normalized_key(candidate))
        if key in seen:
            continue
        seen.add(key)
        family.append(candidate)
        if len(family) == count:
            break
    if len(family) < count:
        raise Inconsistent("could not collect the requested number of classes")
    return family
