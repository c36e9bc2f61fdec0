"""Cycles under the SL(2,R) Moebius action on the three EPH planes."""

from .errors import (
    BranchInstability,
    CycleKitError,
    Degenerate,
    DegenerateFocalPoint,
    DegenerateReflection,
    DegenerateRelationWarning,
    EverywhereZero,
    ExactModeError,
    ExperimentalRegimeWarning,
    FocusUndefined,
    Inconsistent,
    LineHasNoRadius,
    NoRealAxisIntersection,
    NotAKOrbit,
    ShapeError,
    UnderDetermined,
    UsageError,
    ZeroDivisor,
)
from .hypercomplex import (
    ELLIPTIC,
    HYPERBOLIC,
    PARABOLIC,
    HNumber,
    SpaceSign,
    h_conj_modsq,
    h_inv,
    h_mul,
    h_real,
    h_unit,
)
from .moebius import (
    INFINITY,
    GroupElement,
    IwasawaFactors,
    Point,
    PointOrInfinity,
    compose,
    invert,
    iwasawa_decompose,
    iwasawa_recompose,
    k_orbit,
    mobius_apply,
    reduce_to_k_orbit,
    subgroup_element,
)
from .cycle import (
    CycleQuadruple,
    FSCcContext,
    FSCcMatrix,
    HasFocus,
    HasKindCentre,
    IsOrthogonalTo,
    Normalised,
    PassesThrough,
    REAL_LINE,
    centre,
    cycle_eval,
    cycle_from_constraints,
    det_invariant,
    focus,
    from_fscc,
    is_incident,
    normalize,
    projective_close,
    projective_eq,
    radius_sq,
    roots,
    similarity_transform,
    to_fscc,
    trace_part,
    zero_radius_cycle,
)
from .relations import (
    common_inverse_point,
    ghost_cycle,
    heaviside,
    invert_point,
    is_orthogonal,
    is_s_orthogonal,
    orthogonal_family,
    pairing,
    reflect_cycle,
    s_ghost,
)
from .metric import (
    DirectedInterval,
    Distance,
    FromCentre,
    FromFocus,
    LengthKind,
    conformality_ratios,
    distance_sq,
    is_perpendicular,
    length,
    variational_distance_oracle,
)
from .svgout import CycleSetDocument, CycleStyle, parse_document, render_svg
from .figures import FigureRecipe, run_figure

__version__ = "0.1.0"
