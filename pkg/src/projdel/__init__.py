"""Exact tools for projective delineability of real polynomials.

Multivariate rational polynomials, binary forms and GL(2) actions, fixed-degree
resultants and discriminants, real and projective root isolation, sampled
root tracking with monodromy detection, and the classical and projective
projection operators.
"""

from .binary_forms import (
    BinaryForm,
    Matrix2,
    compose_right,
    homogenize,
    homogenize_wrt,
    moebius_transform,
    pullback,
    pullback_wrt,
)
from .delineability import (
    Desingularization,
    FiniteSetVerdict,
    check_finite_set,
    desingularize_at,
    projective_roots_above,
)
from .elimination import (
    bareiss_determinant,
    discriminant_fixed,
    evaluate_then_eliminate,
    resultant_fixed,
    sylvester_matrix,
    univariate_discriminant,
    univariate_resultant,
)
from .errors import (
    AmbiguousMatchError,
    DegreeBoundError,
    DimensionError,
    NullifiedError,
    ParseError,
    PreconditionError,
    ProjDelError,
    TrackingError,
    ZeroPolynomialError,
)
from .poly import MultiPoly, UniPoly, univariate_gcd
from .projection import Cell, ProjectionSet, cell_bounds_1d, project, project_classical, project_projective
from .projective_line import (
    NumProjPoint,
    ProjPoint,
    chordal_distance,
    embed_circle,
    from_affine,
    infinity,
    moebius_point,
)
from .roots import (
    IsolatedRoot,
    ProjRootSet,
    compare_root,
    compare_roots,
    isolate_real_roots,
    projective_roots,
    refine,
    sign_at_root,
    squarefree_decomposition,
)
from .tracking import (
    BasePath,
    RootTrace,
    TrackResult,
    TrackVerdict,
    section_sign_check,
    track_roots,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
