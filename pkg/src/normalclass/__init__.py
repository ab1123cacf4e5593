"""Exact computation of normal classes of surfaces in P^3 and curves in P^2."""

from .arith import GaussianRational, Rational
from .poly import MultiPoly, ParseError, parse_poly
from .groebner import (
    GenericityError,
    IdealHandle,
    MonomialOrder,
    MultiplicityResult,
    NotZeroDimensional,
    degree_zero_dim,
    groebner_basis,
    ideal_dimension,
    local_multiplicity,
    rational_points_zero_dim,
    saturate,
)
from .geometry import (
    HypothesisViolation,
    ProjPoint,
    Similitude,
    apply_similitude,
    base_ideal,
    build_alpha,
    normal_direction,
    normal_polar,
    reduced_alpha,
)
from .schubert import ChowClass, chow_mul, surface_schubert_class
from .classes import (
    Census,
    CurveReport,
    NormalClassReport,
    census_surface_infinity,
    classify_planar_point,
    curve_dual_degree,
    curve_infinity_invariants,
    curve_normal_class_direct,
    curve_report,
    cylinder_reduce,
    quadric_table,
    revolution_reduce,
    surface_normal_class,
    surface_normal_class_reduced,
    theorem1_value,
    theorem4_value,
)

__version__ = "0.1.0"
