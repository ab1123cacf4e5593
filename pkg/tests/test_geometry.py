"""Normal directions, Pluecker maps, polars, base loci, similitudes."""

import random

import pytest

from normalclass.arith import GaussianRational
from normalclass.geometry import (
    HypothesisViolation,
    ProjPoint,
    Similitude,
    apply_similitude,
    base_ideal,
    build_alpha,
    build_nu,
    normal_direction,
    normal_polar,
    plucker_relation,
    polar_generators,
    polar_system,
    random_covector,
    random_similitude,
    reduced_alpha,
)
from normalclass.groebner import degree_dim_one, ideal_dimension
from normalclass.poly import MultiPoly, parse_poly


def P4(text):
    return parse_poly(text, 4)


E1 = P4("x^2 + 2*y^2 + 4*z^2 - t^2")
E2 = P4("x^2 + 4*y^2 + 4*z^2 - t^2")
SADDLE = P4("x*y - z*t")
E6 = P4("x^2*z + z^2*t + y^3")
SPHERE = P4("x^2 + y^2 + z^2 - t^2")
CONE = P4("x^2 + y^2 + z^2")


def test_proj_point_canonical():
    p = ProjPoint([2, 4, 0, 6])
    assert p == ProjPoint([1, 2, 0, 3])
    assert str(p) == "[1:2:0:3]"
    i = GaussianRational(0, 1)
    assert ProjPoint([0, i, -1, 0]) == ProjPoint([0, 1, i, 0])
    with pytest.raises(ValueError):
        ProjPoint([0, 0, 0, 0])
    with pytest.raises(ValueError):
        ProjPoint([1, 2])


def test_normal_direction():
    m = ProjPoint([1, 0, 0, 1])
    assert normal_direction(E1, m) == ProjPoint([1, 0, 0, 0])
    assert normal_direction(SADDLE, ProjPoint([0, 0, 1, 0])) is None
    assert normal_direction(E6, ProjPoint([0, 0, 0, 1])) is None


def test_alpha_components():
    w = build_alpha(SADDLE)
    assert w[0] == P4("x^2 - y^2")
    assert all(a.is_homogeneous() and a.total_degree() == 2 for a in w if not a.is_zero())


def test_plucker_identity_random_surfaces():
    rng = random.Random(0)
    for _ in range(5):
        terms = {}
        d = rng.choice([2, 3])
        import itertools

        for mono in itertools.product(range(d + 1), repeat=4):
            if sum(mono) == d:
                terms[mono] = rng.randint(-4, 4)
        F = MultiPoly(terms, 4)
        if F.is_zero():
            continue
        assert plucker_relation(build_alpha(F)).is_zero()


def test_nu_antisymmetric_and_dependency():
    rng = random.Random(1)
    for F in (E1, SADDLE, E6):
        nu = build_nu(F)
        for i in range(4):
            for j in range(4):
                assert (nu[i][j] + nu[j][i]).is_zero()
        A = random_covector(rng)
        gens = polar_generators(F, A)
        acc = MultiPoly.zero(4)
        for a, g in zip(A, gens):
            acc = acc + g.scale(a)
        assert acc.is_zero()


def test_polar_membership_characterization():
    # m is on the polar exactly when delta(A) sits on the normal line of m
    m = ProjPoint([1, 0, 0, 1])
    n = normal_direction(E1, m)
    assert n == ProjPoint([1, 0, 0, 0])
    # the normal line at m is {[a:0:0:c]}; A with delta(A) on it
    on_line = polar_generators(E1, (2, 0, 0, 1))
    assert all(g.evaluate(m.coords) == 0 for g in on_line)
    off_line = polar_generators(E1, (0, 1, 0, 1))
    assert any(g.evaluate(m.coords) != 0 for g in off_line)


def test_polar_degree_quadric_and_cubic():
    A = random_covector(random.Random(2))
    P = normal_polar(E1, A)
    assert ideal_dimension(P) == 1
    assert degree_dim_one(P) == 3
    P6 = normal_polar(E6, A)
    assert ideal_dimension(P6) == 1
    assert degree_dim_one(P6) == 7


def test_polar_system_bundle():
    A = random_covector(random.Random(3))
    ps = polar_system(E6, A)
    assert plucker_relation(ps.alpha).is_zero()
    assert len(ps.polar_generators) == 4
    with pytest.raises(ValueError):
        polar_system(E6, (0, 0, 0, 0))


def test_base_ideal_classification():
    rep = base_ideal(E1)
    assert rep.points_on_S == [] and rep.residual == 0 and rep.H is None

    rep = base_ideal(E2)
    tags = sorted(tag for _, tag in rep.points_on_S)
    assert tags == ["umbilical-contact", "umbilical-contact"]
    i = GaussianRational(0, 1)
    pts = {P for P, _ in rep.points_on_S}
    assert pts == {ProjPoint([0, 1, i, 0]), ProjPoint([0, 1, -i, 0])}

    rep = base_ideal(SADDLE)
    assert [(str(P), tag) for P, tag in rep.points_on_S] == [
        ("[0:0:1:0]", "contact-at-infinity")
    ]

    rep = base_ideal(E6)
    got = {str(P): tag for P, tag in rep.points_on_S}
    assert got == {"[0:0:0:1]": "singular", "[0:0:1:0]": "contact-at-infinity"}


def test_base_tags_match_gradient_evaluation():
    for F in (E2, SADDLE, E6):
        rep = base_ideal(F)
        for P, tag in rep.points_on_S:
            grads = [F.partial_derivative(v).evaluate(P.coords) for v in ("x", "y", "z")]
            ft = F.partial_derivative("t").evaluate(P.coords)
            if tag == "singular":
                assert not any(grads) and not ft
            elif tag == "contact-at-infinity":
                assert not any(grads) and ft
            else:
                n = normal_direction(F, P)
                assert n == P


def test_reduced_alpha():
    t = MultiPoly.variable("t", 4)
    for F in (SPHERE, CONE):
        H, at = reduced_alpha(F)
        assert H == t
        alpha = build_alpha(F)
        for a, a_t in zip(alpha, at):
            assert (H * a_t - a).is_zero()
    with pytest.raises(HypothesisViolation):
        reduced_alpha(E1)


def test_base_ideal_routes_sphere_to_reduced():
    rep = base_ideal(SPHERE)
    assert rep.dim_B == 2 and rep.H is not None


def test_similitude_validation():
    with pytest.raises(ValueError):
        Similitude.create(((1, 1, 0), (0, 1, 0), (0, 0, 1)), (0, 0, 0))
    s = Similitude.identity()
    assert s.ratio == GaussianRational(1)


def test_apply_similitude_identity_and_permutation():
    s = Similitude.identity()
    assert apply_similitude(E1, s) == E1.monic()
    perm = Similitude.create(((0, 1, 0), (1, 0, 0), (0, 0, 1)), (0, 0, 0))
    assert apply_similitude(E1, perm) == P4("2*x^2 + y^2 + 4*z^2 - t^2").monic()


def test_random_similitude_is_orthogonal():
    for seed in range(5):
        s = random_similitude(random.Random(seed))
        lam = s.ratio
        assert lam
        G = apply_similitude(E6, s)
        assert G.is_homogeneous() and G.total_degree() == 3
