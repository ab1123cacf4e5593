"""End-to-end normal class pipelines.

Surfaces: the saturation route (Bezout degree of surface-cap-polar minus the
base locus contribution), its reduced variant when the base locus has a
two-dimensional part, the census of the curve at infinity with the
closed-form evaluation, and the quadric lookup table.  Curves in P^2: the
direct d^2-saturation route and the formula d + d_dual - Omega - mu_I - mu_J.
Cylinders and surfaces of revolution reduce to planar curves.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import sympy as sp
from sympy import QQ_I

from .arith import GaussianRational
from .geometry import (
    BaseLocusReport,
    HypothesisViolation,
    ProjPoint,
    base_ideal,
    build_alpha,
    normal_direction,
    polar_generators,
    random_covector,
    reduced_alpha,
)
from .groebner import (
    GenericityError,
    IdealHandle,
    NotZeroDimensional,
    degree_dim_one,
    degree_zero_dim,
    exact_divide,
    from_sympy,
    ideal_dimension,
    local_multiplicity,
    local_multiplicity_once,
    poly_gcd,
    rational_points_zero_dim,
    saturation_degree_once,
    sym_vars,
    to_sympy,
    two_seed,
)
from .poly import MultiPoly, variables
from .schubert import ChowClass, surface_schubert_class


# ----------------------------------------------------------------------
# Report types
# ----------------------------------------------------------------------


@dataclass
class NormalClassReport:
    degree: int
    reduced: bool
    d_H: int
    polar_degree: int
    base_points: List[Tuple[ProjPoint, str, int]]
    residual_multiplicity: int
    normal_class: int
    schubert: ChowClass
    seeds_used: Tuple[int, int]

    def ledger_checks(self) -> bool:
        d = self.degree
        dt = d - self.d_H
        total = sum(m for _, _, m in self.base_points) + self.residual_multiplicity
        return self.normal_class == d * (dt * dt - dt + 1) - total and self.normal_class >= 0


@dataclass
class Census:
    d: int
    m_star: Dict[int, int] = field(default_factory=dict)
    m_tilde: Dict[int, int] = field(default_factory=dict)
    kappa_star: int = 0
    kappa_tilde: int = 0
    c_inf: int = 0
    unresolved: List[str] = field(default_factory=list)


@dataclass
class CurveReport:
    d: int
    d_dual: int
    omega_inf: int
    mu_I: int
    mu_J: int
    c_nu_formula: int
    c_nu_direct: int
    certified: bool
    seeds_used: Tuple[int, int]


# ----------------------------------------------------------------------
# Input validation
# ----------------------------------------------------------------------


def _check_surface(F: MultiPoly):
    if F.arity != 4:
        raise ValueError("a surface equation uses variables x, y, z, t")
    if not F.is_homogeneous():
        raise ValueError("the equation must be homogeneous")
    if F.total_degree() < 2:
        raise ValueError("degree must be at least 2")


def _check_curve(G: MultiPoly):
    if G.arity != 3:
        raise ValueError("a curve equation uses variables x, y, z")
    if not G.is_homogeneous():
        raise ValueError("the equation must be homogeneous")
    if G.total_degree() < 2:
        raise ValueError("degree must be at least 2")
    if all(m[2] > 0 for m in G.terms):
        raise HypothesisViolation("the line at infinity is a component of the curve")


# ----------------------------------------------------------------------
# Surface pipelines (saturation route)
# ----------------------------------------------------------------------


def _polar_ideal_degree(F: MultiPoly, gens: List[MultiPoly], seed: int) -> int:
    """Degree of the polar scheme, whatever its dimension."""
    J = IdealHandle(gens)
    dim = ideal_dimension(J)
    if dim == 1:
        return degree_dim_one(J, seed=seed)
    if dim == 0:
        return degree_zero_dim(J, seed=seed)
    if dim == -1:
        return 0
    raise HypothesisViolation(f"polar scheme has dimension {dim}")


def _point_multiplicity(jgens_for, coords, seed: int, retries: int) -> int:
    value, _ = two_seed(
        lambda rng: local_multiplicity_once(jgens_for(rng), coords, rng), seed, retries
    )
    return value


def surface_normal_class(F: MultiPoly, seed: int = 0, retries: int = 3) -> NormalClassReport:
    """Normal class of a surface with finite base locus on it.

    Routes automatically to the reduced pipeline when the base locus has a
    two-dimensional part (spheres, circular cones).
    """
    _check_surface(F)
    d = F.total_degree()
    report = base_ideal(F, seed=seed)
    if report.H is not None:
        return surface_normal_class_reduced(F, seed=seed, retries=retries)
    alpha = [a for a in build_alpha(F) if not a.is_zero()]

    def compute(rng):
        A = random_covector(rng)
        pol = [g for g in polar_generators(F, A) if not g.is_zero()]
        return saturation_degree_once([F] + pol, alpha, rng)

    c_nu, seeds = two_seed(compute, seed, retries)

    def jgens_for(rng):
        A = random_covector(rng)
        return [F] + [g for g in polar_generators(F, A) if not g.is_zero()]

    base_points = []
    acc = 0
    for P, tag in report.points_on_S:
        m = _point_multiplicity(jgens_for, P.coords, seed, retries)
        base_points.append((P, tag, m))
        acc += m
    residual = d * (d * d - d + 1) - c_nu - acc
    if residual < 0:
        raise GenericityError("multiplicity ledger does not close")
    A0 = random_covector(random.Random(seeds[0]))
    polar_deg = _polar_ideal_degree(
        F, [g for g in polar_generators(F, A0) if not g.is_zero()], seed
    )
    return NormalClassReport(
        degree=d,
        reduced=False,
        d_H=0,
        polar_degree=polar_deg,
        base_points=base_points,
        residual_multiplicity=residual,
        normal_class=c_nu,
        schubert=surface_schubert_class(c_nu, d, d),
        seeds_used=seeds,
    )


def surface_normal_class_reduced(
    F: MultiPoly, seed: int = 0, retries: int = 3
) -> NormalClassReport:
    """Normal class when the base locus contains a surface V(H).

    The common factor H of the six Pluecker components is removed, the polars
    are divided by H and the Bezout count uses the reduced degree d - deg H.
    """
    _check_surface(F)
    d = F.total_degree()
    H, alpha_t = reduced_alpha(F)
    d_H = H.total_degree()
    dt = d - d_H
    alpha_nz = [a for a in alpha_t if not a.is_zero()]

    def reduced_polars(A):
        out = []
        for g in polar_generators(F, A):
            if not g.is_zero():
                out.append(exact_divide(g, H))
        return out

    def compute(rng):
        A = random_covector(rng)
        return saturation_degree_once([F] + reduced_polars(A), alpha_nz, rng)

    c_nu, seeds = two_seed(compute, seed, retries)

    # reduced base locus restricted to the surface
    BS = IdealHandle(alpha_nz + [F])
    dim_BS = ideal_dimension(BS)
    if dim_BS >= 1:
        raise HypothesisViolation("reduced base locus meets the surface in positive dimension")
    base_points = []
    acc = 0
    if dim_BS == 0:
        points, _ = rational_points_zero_dim(BS, seed=seed)

        def jgens_for(rng):
            A = random_covector(rng)
            return [F] + reduced_polars(A)

        for P in points:
            tag = _tag_or_reduced(F, P)
            m = _point_multiplicity(jgens_for, P.coords, seed, retries)
            base_points.append((P, tag, m))
            acc += m
    residual = d * (dt * dt - dt + 1) - c_nu - acc
    if residual < 0:
        raise GenericityError("multiplicity ledger does not close")
    A0 = random_covector(random.Random(seeds[0]))
    polar_deg = _polar_ideal_degree(F, reduced_polars(A0), seed)
    return NormalClassReport(
        degree=d,
        reduced=True,
        d_H=d_H,
        polar_degree=polar_deg,
        base_points=base_points,
        residual_multiplicity=residual,
        normal_class=c_nu,
        schubert=surface_schubert_class(c_nu, d, dt),
        seeds_used=seeds,
    )


def _tag_or_reduced(F: MultiPoly, P: ProjPoint) -> str:
    """Tag a reduced base point, falling back to a neutral tag off the
    standard trichotomy."""
    from .geometry import _tag_base_point

    try:
        return _tag_base_point(F, P)
    except HypothesisViolation:
        return "reduced-base"


# ----------------------------------------------------------------------
# Local analysis of plane curve points
# ----------------------------------------------------------------------


def _local_forms(G: MultiPoly, P: ProjPoint) -> Dict[int, MultiPoly]:
    """Graded parts of G translated so that P sits at a chart origin."""
    coords = P.coords
    k = next(i for i, c in enumerate(coords) if c)
    names = variables(3)
    sub = {}
    for i, name in enumerate(names):
        if i == k:
            sub[name] = MultiPoly.constant(1, 3)
        else:
            sub[name] = MultiPoly.variable(name, 3) + MultiPoly.constant(coords[i], 3)
    g = G.substitute(sub)
    forms: Dict[int, Dict] = {}
    for mono, c in g.terms.items():
        deg = sum(mono)
        forms.setdefault(deg, {})[mono] = c
    return {deg: MultiPoly(terms, 3) for deg, terms in sorted(forms.items())}


def _point_curve_multiplicity(G: MultiPoly, P: ProjPoint) -> int:
    """Multiplicity of the curve at P (0 when P is off the curve)."""
    forms = _local_forms(G, P)
    degs = [deg for deg, f in forms.items() if not f.is_zero()]
    if not degs:
        return G.total_degree()
    mu = min(degs)
    return mu


def _binary_form_squarefree(f: MultiPoly) -> bool:
    parts = [f] + [f.partial_derivative(v) for v in variables(3) if f.depends_on(v)]
    return poly_gcd(parts).is_constant()


def _repeated_line(f: MultiPoly) -> MultiPoly:
    """The repeated linear factor of a binary quadratic form c*l^2."""
    parts = [f] + [f.partial_derivative(v) for v in variables(3) if f.depends_on(v)]
    line = poly_gcd(parts)
    if line.total_degree() != 1:
        raise ValueError("quadratic form is not a perfect square")
    return line


def _divides(l: MultiPoly, f: MultiPoly) -> bool:
    if f.is_zero():
        return True
    try:
        exact_divide(f, l)
        return True
    except ValueError:
        return False


def classify_planar_point(G: MultiPoly, P: ProjPoint) -> Tuple[str, int]:
    """Local type of a point of a plane curve.

    Returns (kind, k) with kind in {smooth, ordinary-multiple, ordinary-cusp,
    non-ordinary} and k the multiplicity of the point on the curve.
    """
    forms = _local_forms(G, P)
    degs = sorted(deg for deg, f in forms.items() if not f.is_zero())
    if not degs or degs[0] == 0:
        raise ValueError("point does not lie on the curve")
    k = degs[0]
    if k == 1:
        return ("smooth", 1)
    tangent_cone = forms[k]
    if _binary_form_squarefree(tangent_cone):
        return ("ordinary-multiple", k)
    if k == 2:
        line = _repeated_line(tangent_cone)
        cubic = forms.get(3, MultiPoly.zero(3))
        if not _divides(line, cubic):
            return ("ordinary-cusp", 2)
    return ("non-ordinary", k)


# ----------------------------------------------------------------------
# Census of the curve at infinity (closed-form route)
# ----------------------------------------------------------------------


def surface_at_infinity(F: MultiPoly) -> MultiPoly:
    """The plane curve S_infinity = V(F(x,y,z,0)) inside H_infinity."""
    _check_surface(F)
    terms = {}
    for mono, c in F.terms.items():
        if mono[3] == 0:
            terms[mono[:3]] = c
    G = MultiPoly(terms, 3)
    if G.is_zero():
        raise ValueError("the surface contains the plane at infinity")
    return G


def _umbilic_conic() -> MultiPoly:
    x, y, z = MultiPoly.gens(3)
    return x * x + y * y + z * z


def _on_umbilic(P: ProjPoint) -> bool:
    return not _umbilic_conic().evaluate(P.coords)


def _umbilic_tangent_line(P: ProjPoint) -> MultiPoly:
    q = _umbilic_conic()
    x, y, z = MultiPoly.gens(3)
    acc = MultiPoly.zero(3)
    for v, name in zip((x, y, z), variables(3)):
        acc = acc + v.scale(q.partial_derivative(name).evaluate(P.coords))
    return acc


def census_surface_infinity(F: MultiPoly, seed: int = 0) -> Census:
    """Count and classify the special points of S_infinity used by the
    closed-form normal class evaluation."""
    G = surface_at_infinity(F)
    d = F.total_degree()
    census = Census(d=d)
    grads = [G.partial_derivative(v) for v in variables(3)]
    grads_nz = [g for g in grads if not g.is_zero()]
    singular_points: List[ProjPoint] = []
    if grads_nz:
        Jsing = IdealHandle(grads_nz)
        dim = ideal_dimension(Jsing)
        if dim >= 1:
            census.unresolved.append("positive-dimensional singular locus at infinity")
        elif dim == 0:
            pts, res = rational_points_zero_dim(Jsing, seed=seed)
            singular_points = [P for P in pts if not G.evaluate(P.coords)]
            if res > 0:
                census.unresolved.append(f"non-rational singular candidates (residual {res})")
    else:
        census.unresolved.append("degenerate gradient at infinity")
    for P in singular_points:
        kind, k = classify_planar_point(G, P)
        on_conic = _on_umbilic(P)
        if on_conic:
            line = _umbilic_tangent_line(P)
            local_line = _local_linear_part(line, P)
            cone = _local_forms(G, P)[k]
            if _divides(local_line, cone):
                census.unresolved.append(
                    f"umbilic tangent inside the tangent cone at {P}"
                )
                continue
        if kind == "ordinary-multiple":
            target = census.m_tilde if on_conic else census.m_star
            target[k] = target.get(k, 0) + 1
        elif kind == "ordinary-cusp":
            if on_conic:
                census.kappa_tilde += 1
            else:
                census.kappa_star += 1
        else:
            census.unresolved.append(f"{kind} singular point at {P}")
    # nonsingular contact points with the umbilic conic
    q = _umbilic_conic()
    qg = [q.partial_derivative(v) for v in variables(3)]
    minors = [
        grads[1] * qg[2] - grads[2] * qg[1],
        grads[2] * qg[0] - grads[0] * qg[2],
        grads[0] * qg[1] - grads[1] * qg[0],
    ]
    contact_gens = [g for g in [G, q] + minors if not g.is_zero()]
    Jc = IdealHandle(contact_gens)
    dimc = ideal_dimension(Jc)
    if dimc >= 1:
        census.unresolved.append("positive-dimensional contact locus with the umbilic")
    elif dimc == 0:
        pts, res = rational_points_zero_dim(Jc, seed=seed)
        if res > 0:
            census.unresolved.append(f"non-rational contact candidates (residual {res})")
        Jgq = IdealHandle([G, q])
        for P in pts:
            if P in singular_points:
                continue
            i = local_multiplicity(Jgq, P, seed=seed).multiplicity
            if i == 2:
                census.c_inf += 1
            elif i >= 3:
                census.unresolved.append(f"non-ordinary contact with the umbilic at {P}")
    return census


def _local_linear_part(line: MultiPoly, P: ProjPoint) -> MultiPoly:
    forms = _local_forms(line, P)
    lin = forms.get(1)
    if lin is None or lin.is_zero():
        raise ValueError("line is degenerate at the point")
    return lin


def theorem1_value(census: Census) -> int:
    """Closed-form normal class from the census of the curve at infinity."""
    if census.unresolved:
        raise HypothesisViolation(
            "census not certified: " + "; ".join(census.unresolved)
        )
    d = census.d
    total = d**3 - d**2 + d
    for k, n in census.m_star.items():
        total -= (k - 1) ** 2 * n
    for k, n in census.m_tilde.items():
        total -= k * (k - 1) * n
    total -= 2 * census.kappa_star
    total -= 3 * census.kappa_tilde
    total -= census.c_inf
    return total


# ----------------------------------------------------------------------
# Quadric table
# ----------------------------------------------------------------------


def quadric_form(form: str, alpha, beta=None) -> MultiPoly:
    """The representative quadric of each similarity class."""
    a = GaussianRational.coerce(alpha)
    x, y, z, t = MultiPoly.gens(4)
    if form == "a":
        if beta is None:
            raise ValueError("form (a) needs beta")
        b = GaussianRational.coerce(beta)
        return x * x + (y * y).scale(a) + (z * z).scale(b) + t * t
    if form == "b":
        if beta is None:
            raise ValueError("form (b) needs beta")
        b = GaussianRational.coerce(beta)
        return x * x + (y * y).scale(a) + (z * z).scale(b)
    if form == "c":
        return x * x + (y * y).scale(a) - (t * z).scale(2)
    if form == "d":
        return x * x + (y * y).scale(a) + t * t
    raise ValueError(f"unknown quadric form {form!r}")


def quadric_table(form: str, alpha, beta=None) -> int:
    """Normal class of each quadric similarity class, by lookup."""
    a = GaussianRational.coerce(alpha)
    one = GaussianRational(1)
    if not a or (beta is not None and not GaussianRational.coerce(beta)):
        raise ValueError("parameters must be nonzero")
    if form in ("a", "b"):
        if beta is None:
            raise ValueError(f"form ({form}) needs beta")
        b = GaussianRational.coerce(beta)
        distinct = a != one and b != one and a != b
        if form == "a":
            if distinct:
                return 6
            if a == one and b == one:
                return 2
            if a == one or b == one or a == b:
                return 4
        else:
            if distinct:
                return 4
            if a == one and b == one:
                return 0
            return 2
    if form == "c":
        return 3 if a == one else 5
    if form == "d":
        return 2 if a == one else 4
    raise ValueError(f"unknown quadric form {form!r}")


# ----------------------------------------------------------------------
# Planar curves
# ----------------------------------------------------------------------


def curve_base_map(G: MultiPoly) -> List[MultiPoly]:
    """The normal-line map of a plane curve: m -> m wedge (G_x, G_y, 0)."""
    x, y, z = MultiPoly.gens(3)
    Gx = G.partial_derivative("x")
    Gy = G.partial_derivative("y")
    return [-z * Gy, z * Gx, x * Gy - y * Gx]


def _curve_random_covector(rng: random.Random) -> Tuple[int, int, int]:
    def nz():
        v = 0
        while v == 0:
            v = rng.randint(-97, 97)
        return v

    return (nz(), nz(), nz())


def curve_normal_class_direct(
    G: MultiPoly, seed: int = 0, retries: int = 3
) -> Tuple[int, Tuple[int, int]]:
    """Normal class as d^2 minus the base contribution, via saturation."""
    _check_curve(G)
    N = curve_base_map(G)
    N_nz = [g for g in N if not g.is_zero()]
    if not N_nz:
        raise HypothesisViolation("degenerate normal-line map")

    def compute(rng):
        L = _curve_random_covector(rng)
        pencil = MultiPoly.zero(3)
        for c, g in zip(L, N):
            pencil = pencil + g.scale(c)
        return saturation_degree_once([G, pencil], N_nz, rng)

    return two_seed(compute, seed, retries)


def curve_dual_degree(G: MultiPoly, seed: int = 0, retries: int = 3) -> int:
    """Class of the curve: tangents through a generic point, via polars."""
    _check_curve(G)
    grads = [G.partial_derivative(v) for v in variables(3)]
    grads_nz = [g for g in grads if not g.is_zero()]

    def compute(rng):
        L = _curve_random_covector(rng)
        polar = MultiPoly.zero(3)
        for c, g in zip(L, grads):
            polar = polar + g.scale(c)
        return saturation_degree_once([G, polar], grads_nz, rng)

    value, _ = two_seed(compute, seed, retries)
    return value


CYCLIC_I = ProjPoint([GaussianRational(1), GaussianRational(0, 1), GaussianRational(0)])
CYCLIC_J = ProjPoint([GaussianRational(1), GaussianRational(0, -1), GaussianRational(0)])


def curve_infinity_invariants(G: MultiPoly) -> Tuple[int, int, int, bool]:
    """(Omega at infinity, mu_I, mu_J, certified).

    Omega sums i_P(C, line at infinity) - mu_P(C) over the points at
    infinity.  Non-rational points come from irreducible factors of the
    binary form G(x,y,0) over Q(i): simple factors contribute 0; repeated
    nonlinear factors cannot be resolved pointwise and leave the result
    uncertified.
    """
    _check_curve(G)
    binary = MultiPoly(
        {m[:2] + (0,): c for m, c in G.terms.items() if m[2] == 0}, 3
    )
    if binary.is_zero():
        raise HypothesisViolation("the line at infinity is a component of the curve")
    syms = sym_vars(3)
    P2 = sp.Poly(to_sympy(binary), syms[0], syms[1], domain=QQ_I)
    omega = 0
    certified = True
    for f, e in P2.factor_list()[1]:
        if f.total_degree() == 1:
            a = f.coeff_monomial((1, 0))
            b = f.coeff_monomial((0, 1))
            av = _const_gr(a)
            bv = _const_gr(b)
            P = ProjPoint([bv, -av, GaussianRational(0)])
            mu = _point_curve_multiplicity(G, P)
            omega += e - mu
        elif e == 1:
            # each point of a simple factor meets the line transversally
            # through a smooth branch: i_P = mu_P = 1
            continue
        else:
            certified = False
    mu_I = _mu_if_on_curve(G, CYCLIC_I)
    mu_J = _mu_if_on_curve(G, CYCLIC_J)
    return omega, mu_I, mu_J, certified


def _const_gr(expr) -> GaussianRational:
    from .groebner import _gr_const

    return _gr_const(sp.sympify(expr))


def _mu_if_on_curve(G: MultiPoly, P: ProjPoint) -> int:
    if G.evaluate(P.coords):
        return 0
    return _point_curve_multiplicity(G, P)


def theorem4_value(d: int, d_dual: int, omega_inf: int, mu_I: int, mu_J: int) -> int:
    """Formula route: d + d_dual - Omega - mu_I - mu_J."""
    return d + d_dual - omega_inf - mu_I - mu_J


def curve_report(G: MultiPoly, seed: int = 0, retries: int = 3) -> CurveReport:
    """Both curve routes plus their ingredients, cross-checked."""
    _check_curve(G)
    d = G.total_degree()
    c_direct, seeds = curve_normal_class_direct(G, seed=seed, retries=retries)
    d_dual = curve_dual_degree(G, seed=seed, retries=retries)
    omega, mu_I, mu_J, certified = curve_infinity_invariants(G)
    c_formula = theorem4_value(d, d_dual, omega, mu_I, mu_J)
    if certified and c_formula != c_direct:
        raise GenericityError(
            f"route disagreement: formula {c_formula} vs direct {c_direct}"
        )
    return CurveReport(
        d=d,
        d_dual=d_dual,
        omega_inf=omega,
        mu_I=mu_I,
        mu_J=mu_J,
        c_nu_formula=c_formula,
        c_nu_direct=c_direct,
        certified=certified,
        seeds_used=seeds,
    )


# ----------------------------------------------------------------------
# Reductions to planar curves
# ----------------------------------------------------------------------


def cylinder_reduce(F: MultiPoly) -> Optional[MultiPoly]:
    """Base curve of a cylinder with rulings along the z-axis, if any."""
    if F.arity != 4 or F.depends_on("z"):
        return None
    terms = {}
    for mono, c in F.terms.items():
        terms[(mono[0], mono[1], mono[3])] = c
    return MultiPoly(terms, 3)


def revolution_reduce(F: MultiPoly) -> Optional[MultiPoly]:
    """Profile curve of a surface of revolution about the z-axis, if any.

    Detects F = G(x^2 + y^2, z, t) by solving a linear system matching the
    coefficients of the candidate expansion, and returns V(G(x^2, y, z)).
    """
    if F.arity != 4 or not F.is_homogeneous():
        return None
    d = F.total_degree()
    candidates = [
        (a, b, c)
        for a in range(d // 2 + 1)
        for b in range(d + 1)
        for c in range(d + 1)
        if 2 * a + b + c == d
    ]
    x, y, z, t = MultiPoly.gens(4)
    u = x * x + y * y
    expansions = [(abc, (u**abc[0]) * (z ** abc[1]) * (t ** abc[2])) for abc in candidates]
    monomials = sorted(set().union(*[set(e.terms) for _, e in expansions], set(F.terms)))
    idx = {m: i for i, m in enumerate(monomials)}
    rows = len(monomials)
    cols = len(expansions)
    M = [[QQ_I.zero] * cols for _ in range(rows)]
    for j, (_, e) in enumerate(expansions):
        for m, c in e.terms.items():
            M[idx[m]][j] = QQ_I.from_sympy(sp.Rational(c.re) + sp.Rational(c.im) * sp.I)
    rhs = [[QQ_I.zero] for _ in range(rows)]
    for m, c in F.terms.items():
        rhs[idx[m]][0] = QQ_I.from_sympy(sp.Rational(c.re) + sp.Rational(c.im) * sp.I)
    from sympy.polys.matrices import DomainMatrix

    A = DomainMatrix(M, (rows, cols), QQ_I)
    B = DomainMatrix(rhs, (rows, 1), QQ_I)
    aug = A.hstack(B)
    R, pivots = aug.rref()
    coeffs = [QQ_I.zero] * cols
    Rl = R.to_list()
    for r, p in enumerate(pivots):
        if p == cols:
            # pivot in the right-hand column: inconsistent system
            return None
        coeffs[p] = Rl[r][cols]
    terms = {}
    for (a, b, c), v in zip(candidates, coeffs):
        if v != QQ_I.zero:
            gr = _const_gr(QQ_I.to_sympy(v))
            terms[(2 * a, b, c)] = gr
    G = MultiPoly(terms, 3)
    # confirm the rewrite exactly
    check = MultiPoly.zero(4)
    for (a, b, c), v in zip(candidates, coeffs):
        if v != QQ_I.zero:
            gr = _const_gr(QQ_I.to_sympy(v))
            check = check + ((u**a) * (z**b) * (t**c)).scale(gr)
    if not (check - F).is_zero():
        return None
    return G
