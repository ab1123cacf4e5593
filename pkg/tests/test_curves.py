"""Planar curve pipelines: direct saturation and the invariant formula."""

import pytest

from normalclass.classes import (
    curve_dual_degree,
    curve_infinity_invariants,
    curve_normal_class_direct,
    curve_report,
    theorem4_value,
)
from normalclass.geometry import HypothesisViolation
from normalclass.poly import parse_poly


def P3(text):
    return parse_poly(text, 3)


CIRCLE = P3("x^2 + y^2 - z^2")
ELLIPSE = P3("x^2 + 2*y^2 - z^2")
CUSPIDAL = P3("y^2*z - x^3")
NODAL = P3("y^2*z - x^3 - x^2*z")


def test_direct_circle_and_ellipse():
    c, _ = curve_normal_class_direct(CIRCLE)
    assert c == 2
    c, _ = curve_normal_class_direct(ELLIPSE)
    assert c == 4


def test_dual_degrees():
    assert curve_dual_degree(CIRCLE) == 2
    assert curve_dual_degree(ELLIPSE) == 2
    # smooth cubic: d(d-1) = 6
    assert curve_dual_degree(P3("y^2*z - x^3 + x*z^2 + z^3")) == 6
    # one cusp drops the class by 3, one node by 2
    assert curve_dual_degree(CUSPIDAL) == 3
    assert curve_dual_degree(NODAL) == 4


def test_infinity_invariants():
    omega, mu_I, mu_J, certified = curve_infinity_invariants(CIRCLE)
    assert (omega, mu_I, mu_J) == (0, 1, 1) and certified
    omega, mu_I, mu_J, certified = curve_infinity_invariants(ELLIPSE)
    assert (omega, mu_I, mu_J) == (0, 0, 0) and certified
    # parabola-like tangency with the line at infinity: i = 2, mu = 1
    omega, mu_I, mu_J, certified = curve_infinity_invariants(P3("y*z - x^2"))
    assert (omega, mu_I, mu_J) == (1, 0, 0) and certified


def test_formula_values():
    assert theorem4_value(2, 2, 0, 1, 1) == 2
    assert theorem4_value(2, 2, 0, 0, 0) == 4
    assert theorem4_value(3, 3, 0, 0, 0) == 6


def test_reports_cross_check():
    for G, expect in ((CIRCLE, 2), (ELLIPSE, 4), (NODAL, 5)):
        rep = curve_report(G)
        assert rep.c_nu_direct == rep.c_nu_formula == expect
        assert rep.certified


def test_cuspidal_cubic_routes_agree():
    rep = curve_report(CUSPIDAL)
    assert rep.certified
    assert rep.c_nu_direct == rep.c_nu_formula
    # tangent line at infinity meets at [0:1:0] with contact 3 and mu 1
    assert rep.omega_inf == 2
    assert rep.d_dual == 3


def test_rejects_degenerate_inputs():
    with pytest.raises(HypothesisViolation):
        curve_infinity_invariants(P3("z*x + z*y"))
    with pytest.raises(ValueError):
        curve_normal_class_direct(P3("x + y"))
    with pytest.raises(ValueError):
        curve_normal_class_direct(P3("x^2 + y"))
