import random
from fractions import Fraction

import pytest

from conftest import (
    ALL_SIGNS,
    rand_cycle,
    rand_fraction,
    rand_group_exact,
    rand_real_circle,
    sample_points_on_cycle,
)
from cyclekit import (
    CycleQuadruple,
    FSCcContext,
    FocusUndefined,
    GroupElement,
    HasFocus,
    HasKindCentre,
    INFINITY,
    Inconsistent,
    LineHasNoRadius,
    Normalised,
    NoRealAxisIntersection,
    EverywhereZero,
    PassesThrough,
    Point,
    ShapeError,
    SpaceSign,
    UnderDetermined,
    centre,
    cycle_eval,
    cycle_from_constraints,
    det_invariant,
    focus,
    from_fscc,
    is_incident,
    mobius_apply,
    normalize,
    projective_eq,
    radius_sq,
    roots,
    similarity_transform,
    to_fscc,
    trace_part,
    zero_radius_cycle,
)

E, P, H = ALL_SIGNS
CTX_E = FSCcContext(E, 1)
ALL_CTX = [FSCcContext(sc, s) for sc in ALL_SIGNS for s in (1, -1)]

UNIT_CIRCLE = CycleQuadruple(1, 0, 0, -1)


def test_cycle_eval_examples():
    assert cycle_eval(UNIT_CIRCLE, Point(1, 0), E) == 0
    assert cycle_eval(CycleQuadruple(1, 0, 1, 0), Point(2, 2), P) == 0
    assert cycle_eval(UNIT_CIRCLE, Point(0, 0), E) == -1


def test_incidence_of_infinity_is_lineness():
    assert is_incident(CycleQuadruple(0, 1, 2, 3), INFINITY, E)
    assert not is_incident(UNIT_CIRCLE, INFINITY, E)


def test_fscc_matrix_example():
    mat = to_fscc(CycleQuadruple(1, 2, 3, 4), CTX_E)
    a11, a12, a21, a22 = mat.entries()
    assert (a11.re, a11.im) == (2, 3)
    assert (a12.re, a12.im) == (-4, 0)
    assert (a21.re, a21.im) == (1, 0)
    assert (a22.re, a22.im) == (-2, 3)
    flipped = to_fscc(CycleQuadruple(1, 2, 3, 4), FSCcContext(E, -1))
    assert flipped.entries()[0].im == -3


def test_fscc_roundtrip_random():
    rng = random.Random(3)
    for _ in range(500):
        cyc = rand_cycle(rng)
        ctx = FSCcContext(SpaceSign(rng.choice([-1, 0, 1])), rng.choice([1, -1]))
        assert projective_eq(from_fscc(to_fscc(cyc, ctx)), cyc)


def test_fscc_shape_guard():
    from cyclekit import FSCcMatrix, HNumber

    good = to_fscc(UNIT_CIRCLE, CTX_E)
    with pytest.raises(ShapeError):
        FSCcMatrix(
            good.a11,
            HNumber(Fraction(1), Fraction(1), E),
            good.a21,
            good.a22,
            CTX_E,
        )


def test_similarity_examples():
    assert similarity_transform(UNIT_CIRCLE, GroupElement.identity(), CTX_E) == UNIT_CIRCLE
    from cyclekit import subgroup_element

    shifted = similarity_transform(UNIT_CIRCLE, subgroup_element("N", Fraction(1)), CTX_E)
    assert projective_eq(shifted, CycleQuadruple(1, 1, 0, 0))
    rotated = similarity_transform(UNIT_CIRCLE, GroupElement(0, -1, 1, 0), CTX_E)
    assert projective_eq(rotated, UNIT_CIRCLE)


def test_similarity_matches_point_action():
    rng = random.Random(8)
    done = 0
    while done < 30:
        sigma = SpaceSign(rng.choice([-1, 0, 1]))
        cyc = rand_cycle(rng, k_nonzero=True)
        pts = sample_points_on_cycle(cyc, sigma, 12)
        if len(pts) < 6:
            continue
        g = rand_group_exact(rng)
        image = similarity_transform(cyc, g, FSCcContext(sigma, 1))
        norm = max(abs(float(x)) for x in image.components())
        scaled = CycleQuadruple(*(float(x) / norm for x in image.components()))
        for u, v in pts:
            w = mobius_apply(GroupElement(*(float(x) for x in g.entries())), Point(u, v), sigma)
            if w is INFINITY:
                continue
            assert abs(cycle_eval(scaled, w, sigma)) < 1e-9
        done += 1


def test_similarity_context_independence():
    rng = random.Random(9)
    for _ in range(60):
        cyc = rand_cycle(rng)
        g = rand_group_exact(rng)
        images = [similarity_transform(cyc, g, ctx) for ctx in ALL_CTX]
        for other in images[1:]:
            assert projective_eq(images[0], other)


def test_similarity_preserves_det_and_trace():
    rng = random.Random(10)
    for _ in range(100):
        cyc = rand_cycle(rng)
        g = rand_group_exact(rng)
        for ctx in ALL_CTX:
            image = similarity_transform(cyc, g, ctx)
            assert det_invariant(image, ctx) == det_invariant(cyc, ctx)
            assert trace_part(image, ctx) == trace_part(cyc, ctx)


def test_centres():
    cyc = CycleQuadruple(1, 1, 1, 0)
    assert centre(cyc, E) == Point(1, 1)
    assert centre(cyc, P) == Point(1, 0)
    assert centre(cyc, H) == Point(1, -1)
    assert centre(CycleQuadruple(0, 1, 1, 0), E) is INFINITY


def test_parabolic_centre_is_midpoint():
    rng = random.Random(12)
    for _ in range(200):
        cyc = rand_cycle(rng, k_nonzero=True)
        ce = centre(cyc, E)
        cp = centre(cyc, P)
        ch = centre(cyc, H)
        assert cp.u == (ce.u + ch.u) / 2 or cp.u == Fraction(ce.u + ch.u, 2)
        assert 2 * cp.v == ce.v + ch.v


def test_det_trace_radius():
    assert det_invariant(UNIT_CIRCLE, CTX_E) == -1
    assert det_invariant(CycleQuadruple(1, 1, 2, 5), CTX_E) == 0
    assert radius_sq(UNIT_CIRCLE, CTX_E) == 1
    assert radius_sq(CycleQuadruple(1, 0, 1, 0), CTX_E) == 1
    assert radius_sq(CycleQuadruple(1, 1, 1, 0), FSCcContext(P, 1)) == 1
    assert trace_part(CycleQuadruple(1, 2, 3, 4), CTX_E) == 6
    assert trace_part(CycleQuadruple(1, 2, 3, 4), FSCcContext(E, -1)) == -6
    with pytest.raises(LineHasNoRadius):
        radius_sq(CycleQuadruple(0, 0, 1, 0), CTX_E)


def test_parabolic_radius_is_quarter_root_gap():
    cyc = CycleQuadruple(1, 1, 1, 0)
    assert roots(cyc) == [0, 2]
    assert radius_sq(cyc, FSCcContext(P, 1)) == 1  # diameter 2 = root gap


def test_focus_anchors_of_parabola():
    parabola = CycleQuadruple(1, 0, 1, 0)  # v = u^2/2
    assert focus(parabola, P) == Point(0, 0)
    assert focus(parabola, H) == Point(0, Fraction(1, 2))
    assert focus(parabola, E) == Point(0, Fraction(-1, 2))
    with pytest.raises(FocusUndefined):
        focus(UNIT_CIRCLE, E)


def test_zero_radius_cycles():
    assert zero_radius_cycle((1, 2), CTX_E) == CycleQuadruple(1, 1, 2, 5)
    assert zero_radius_cycle((1, 2), FSCcContext(P, 1)) == CycleQuadruple(1, 1, 2, 1)
    assert zero_radius_cycle((1, 2), FSCcContext(H, 1)) == CycleQuadruple(1, 1, 2, -3)
    rng = random.Random(14)
    for _ in range(100):
        at = (rand_fraction(rng), rand_fraction(rng))
        for ctx in ALL_CTX:
            z = zero_radius_cycle(at, ctx)
            assert det_invariant(z, ctx) == 0
            assert radius_sq(z, ctx) == 0


def test_roots():
    assert roots(UNIT_CIRCLE) == [-1, 1]
    assert roots(CycleQuadruple(1, 1, 1, 0)) == [0, 2]
    assert roots(CycleQuadruple(1, 0, 1, 1)) == []
    assert roots(CycleQuadruple(0, 1, 1, 4)) == [2]
    with pytest.raises(NoRealAxisIntersection):
        roots(CycleQuadruple(0, 0, 1, 1))
    with pytest.raises(EverywhereZero):
        roots(CycleQuadruple(0, 0, 1, 0))


def test_projective_eq_and_normalize():
    assert projective_eq(CycleQuadruple(2, 0, 0, -2), UNIT_CIRCLE)
    assert not projective_eq(CycleQuadruple(2, 0, 0, -2), CycleQuadruple(1, 0, 1, -1))
    assert normalize(CycleQuadruple(2, 4, 6, 8), "k-one") == CycleQuadruple(1, 2, 3, 4)
    with pytest.raises(ValueError):
        normalize(UNIT_CIRCLE, "det-one", CTX_E)
    scaled = normalize(CycleQuadruple(1, 0, 2, 0), "det-one", FSCcContext(H, 1))
    assert det_invariant(scaled, FSCcContext(H, 1)) == 1


def test_constraints_three_points():
    sols = cycle_from_constraints(
        [
            PassesThrough((1, 0), E),
            PassesThrough((-1, 0), E),
            PassesThrough((0, 1), E),
            Normalised(),
        ]
    )
    assert sols == [UNIT_CIRCLE]


def test_constraints_centre_through():
    sols = cycle_from_constraints(
        [
            HasKindCentre((0, Fraction(-1, 2)), E),
            PassesThrough((0, Fraction(1, 2)), E),
            Normalised(),
        ]
    )
    assert sols == [CycleQuadruple(1, 0, Fraction(-1, 2), Fraction(-3, 4))]


def test_constraints_underdetermined():
    with pytest.raises(UnderDetermined):
        cycle_from_constraints(
            [PassesThrough((0, 0), E), PassesThrough((0, 2), E), Normalised()]
        )


def test_constraints_focus_double_root():
    sols = cycle_from_constraints(
        [
            HasFocus((0, 1), E),
            PassesThrough((0, Fraction(1, 2)), E),
            Normalised(),
        ]
    )
    assert sols == [CycleQuadruple(1, 0, Fraction(-1, 2), Fraction(-3, 4))]


def test_constraints_focus_two_branches():
    sols = cycle_from_constraints(
        [
            HasFocus((0, Fraction(-1, 2)), E),
            PassesThrough((1, 1), E),
            Normalised(),
        ]
    )
    assert len(sols) == 2
    assert projective_eq(sols[0], CycleQuadruple(1, 0, 1, 0))
    assert projective_eq(sols[1], CycleQuadruple(1, 0, 2, 2))


def test_constraints_focus_without_chart():
    # same two branches as the k = 1 version, found projectively
    sols = cycle_from_constraints(
        [HasFocus((0, Fraction(-1, 2)), E), PassesThrough((1, 1), E)]
    )
    assert len(sols) == 2
    found = {tuple(normalize(s, "k-one").components()) for s in sols}
    assert (1, 0, 1, 0) in found
    assert (1, 0, 2, 2) in found


def test_constraints_inconsistent():
    with pytest.raises(Inconsistent):
        cycle_from_constraints(
            [
                HasFocus((0, 1), E),
                PassesThrough((0, 2), E),
                Normalised(),
            ]
        )


def test_constraints_projective_without_chart():
    # three incidences pin the circle projectively even without k = 1
    sols = cycle_from_constraints(
        [
            PassesThrough((1, 0), E),
            PassesThrough((-1, 0), E),
            PassesThrough((0, 1), E),
        ]
    )
    assert len(sols) == 1
    assert projective_eq(sols[0], UNIT_CIRCLE)


def test_constraints_orthogonality_rows():
    from cyclekit import IsOrthogonalTo, pairing

    rng = random.Random(21)
    for _ in range(25):
        fixed = rand_real_circle(rng)
        b = (rand_fraction(rng), rand_fraction(rng))
        c = (rand_fraction(rng), rand_fraction(rng))
        try:
            sols = cycle_from_constraints(
                [
                    IsOrthogonalTo(fixed, CTX_E),
                    PassesThrough(b, E),
                    PassesThrough(c, E),
                    Normalised(),
                ]
            )
        except (Inconsistent, UnderDetermined):
            continue
        for sol in sols:
            assert pairing(sol, fixed, CTX_E) == 0
            assert cycle_eval(sol, Point(*b), E) == 0
