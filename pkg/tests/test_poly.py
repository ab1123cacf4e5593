"""Sparse polynomials and the input grammar."""

from fractions import Fraction

import pytest

from normalclass.arith import GaussianRational
from normalclass.poly import MultiPoly, ParseError, euler_check, parse_poly


def test_basic_arithmetic():
    x, y, z, t = MultiPoly.gens(4)
    p = (x + y) * (x - y)
    assert p == x * x - y * y
    assert (x + 1) ** 2 == x * x + 2 * x + 1
    assert (p - p).is_zero()
    assert x * 0 == MultiPoly.zero(4)


def test_degrees_and_homogeneity():
    x, y, z, t = MultiPoly.gens(4)
    F = x * x * z + z * z * t + y**3
    assert F.total_degree() == 3
    assert F.is_homogeneous()
    assert not (x * x + y).is_homogeneous()
    assert MultiPoly.zero(4).total_degree() == -1


def test_partial_derivatives():
    x, y, z, t = MultiPoly.gens(4)
    F = x * x * z + z * z * t + y**3
    assert F.partial_derivative("x") == 2 * x * z
    assert F.partial_derivative("y") == 3 * y * y
    assert F.partial_derivative("z") == x * x + 2 * z * t
    assert F.partial_derivative("t") == z * z


def test_euler_identity():
    F = parse_poly("x^2*z + z^2*t + y^3", 4)
    assert euler_check(F)
    G = parse_poly("x*y - z*t", 4)
    assert euler_check(G)
    with pytest.raises(ValueError):
        euler_check(parse_poly("x^2 + y", 4))


def test_evaluate():
    F = parse_poly("x^2 + 2*y^2 + 4*z^2 - t^2", 4)
    assert F.evaluate([1, 0, 0, 1]) == 0
    assert F.evaluate([1, 1, 1, 1]) == 6
    i = GaussianRational(0, 1)
    G = parse_poly("x^2 + y^2", 3)
    assert G.evaluate([1, i, 0]) == 0


def test_substitute():
    x, y, z = MultiPoly.gens(3)
    p = x * x + y
    q = p.substitute({"x": y, "y": z})
    assert q == y * y + z
    # arity-changing substitution must cover every variable
    x4, y4, z4, t4 = MultiPoly.gens(4)
    r = parse_poly("x^2 + t", 4).substitute({"x": x, "y": y, "z": z, "t": z})
    assert r == x * x + z


def test_parser_basics():
    assert parse_poly("x^2 + 2*y^2 + 4*z^2 - t^2", 4).total_degree() == 2
    assert parse_poly("3/2*x", 3) == MultiPoly.variable("x", 3).scale(Fraction(3, 2))
    p = parse_poly("i*x + y", 3)
    assert p.coefficient((1, 0, 0)) == GaussianRational(0, 1)
    assert parse_poly("-(x - y)", 3) == parse_poly("y - x", 3)
    assert parse_poly("(x + y)^3", 3) == (MultiPoly.variable("x", 3) + MultiPoly.variable("y", 3)) ** 3


def test_parser_rejects():
    with pytest.raises(ParseError):
        parse_poly("x y", 3)  # no implicit multiplication
    with pytest.raises(ParseError):
        parse_poly("t", 3)  # t is not a curve variable
    with pytest.raises(ParseError):
        parse_poly("x^(2)", 3)
    with pytest.raises(ParseError):
        parse_poly("(x + y", 3)
    with pytest.raises(ParseError):
        parse_poly("x / y", 3)  # division only by constants
    with pytest.raises(ParseError):
        parse_poly("w + 1", 4)


def test_leading_term_order():
    x, y, z = MultiPoly.gens(3)
    # graded first, then reverse lexicographic tie-break
    p = x * x + x * y * z
    mono, c = p.leading_term()
    assert mono == (1, 1, 1)
    assert (x * x + y * y).leading_term()[0] == (2, 0, 0)


def test_monic_and_str():
    p = parse_poly("2*x^2 - 4*y^2", 3)
    assert p.monic() == parse_poly("x^2 - 2*y^2", 3)
    assert str(parse_poly("x - y", 3)) == "x-y"
    assert str(MultiPoly.zero(3)) == "0"


def test_immutability():
    p = parse_poly("x", 3)
    with pytest.raises(AttributeError):
        p.terms = {}
