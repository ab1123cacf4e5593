"""Ideal-theoretic kernel over Q(i).

Groebner bases, saturation, dimension, degree of zero-dimensional ideals,
local intersection multiplicity, and rational point extraction.  Generic
choices (chart changes, auxiliary linear forms) follow a two-seed protocol:
each value is computed under two independent draws and must agree.

Degrees and local multiplicities of zero-dimensional schemes are computed
through multiplication matrices on the finite quotient algebra: the degree of
a saturation J : K^infinity equals the stable rank of multiplication by a
generic element of K, which avoids an explicit elimination step.  The
elimination-based saturate() below is the reference implementation and the
two routes are cross-checked in tests.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import sympy as sp
from sympy import QQ_I
from sympy.polys.matrices import DomainMatrix

from .arith import GaussianRational
from .poly import MultiPoly, variables


class GenericityError(RuntimeError):
    """Two independent generic draws disagreed (or draws kept degenerating)."""


class NotZeroDimensional(ValueError):
    """Operation requires a zero-dimensional ideal."""


_SYMS4 = sp.symbols("x y z t")
_SYMS3 = _SYMS4[:3]


def sym_vars(arity: int):
    return _SYMS4 if arity == 4 else _SYMS3


# ----------------------------------------------------------------------
# Conversions between MultiPoly and sympy expressions
# ----------------------------------------------------------------------


def to_sympy(p: MultiPoly):
    syms = sym_vars(p.arity)
    expr = sp.Integer(0)
    for m, c in p.terms.items():
        co = sp.Rational(c.re) + sp.Rational(c.im) * sp.I
        mono = sp.Integer(1)
        for v, e in zip(syms, m):
            if e:
                mono *= v**e
        expr += co * mono
    return sp.expand(expr)


def _fraction(q) -> Fraction:
    return Fraction(int(q.p), int(q.q))


def _gr_const(expr) -> GaussianRational:
    re, im = sp.expand(expr).as_real_imag()
    return GaussianRational(_fraction(sp.Rational(re)), _fraction(sp.Rational(im)))


def from_sympy(expr, arity: int) -> MultiPoly:
    syms = sym_vars(arity)
    pe = sp.expand(expr)
    if pe == 0:
        return MultiPoly.zero(arity)
    P = sp.Poly(pe, *syms, domain=QQ_I)
    terms: Dict[tuple, GaussianRational] = {}
    for mono, coef in zip(P.monoms(), P.coeffs()):
        terms[tuple(mono)] = _gr_const(coef)
    return MultiPoly(terms, arity)


def gr_to_sympy(c: GaussianRational):
    return sp.Rational(c.re) + sp.Rational(c.im) * sp.I


# ----------------------------------------------------------------------
# Domain types
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order: grevlex, lex, or an order eliminating the first k
    variables (realized by lex, which is a valid elimination order)."""

    kind: str = "grevlex"

    def sympy_order(self) -> str:
        if self.kind in ("grevlex", "lex"):
            return self.kind
        if self.kind.startswith("elim"):
            return "lex"
        raise ValueError(f"unknown monomial order {self.kind!r}")


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


@dataclass
class IdealHandle:
    """An ideal given by generators, with cached reduced Groebner bases."""

    generators: List[MultiPoly]
    _cache: Dict[str, List[MultiPoly]] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        gens = [g for g in self.generators if not g.is_zero()]
        if not gens:
            raise ValueError("ideal needs at least one nonzero generator")
        arities = {g.arity for g in gens}
        if len(arities) != 1:
            raise ValueError("generators live in different rings")
        self.generators = gens

    @property
    def arity(self) -> int:
        return self.generators[0].arity

    def exprs(self):
        return [to_sympy(g) for g in self.generators]

    def basis(self, order: MonomialOrder = GREVLEX):
        """Cached sympy Groebner object for this ideal."""
        key = order.kind
        cached = self._cache.get(key)
        if cached is None:
            cached = sp.groebner(
                self.exprs(), *sym_vars(self.arity), domain=QQ_I, order=order.sympy_order()
            )
            self._cache[key] = cached
        return cached

    def contains(self, p: MultiPoly) -> bool:
        return self.basis().reduce(to_sympy(p))[1] == 0


@dataclass(frozen=True)
class MultiplicityResult:
    point: object
    multiplicity: int


# ----------------------------------------------------------------------
# Groebner bases, dimension
# ----------------------------------------------------------------------


def groebner_basis(J: IdealHandle, order: MonomialOrder = GREVLEX) -> List[MultiPoly]:
    """Reduced, monic Groebner basis as MultiPoly list."""
    G = J.basis(order)
    return [from_sympy(g, J.arity).monic() for g in G.exprs]


def _leading_monomials(G, syms, order: str):
    return [tuple(sp.Poly(g, *syms, domain=QQ_I).LM(order=order).exponents) for g in G.exprs]


def ideal_dimension(J: IdealHandle) -> int:
    """Dimension of the projective scheme V(J); -1 for empty (or unit ideal).

    Uses the standard independent-variable-set computation on the grevlex
    leading-term staircase, then subtracts 1 for projectivization.
    """
    G = J.basis(GREVLEX)
    syms = sym_vars(J.arity)
    if any(e.is_number and e != 0 for e in G.exprs):
        return -1
    lms = _leading_monomials(G, syms, "grevlex")
    n = J.arity
    best = 0
    for r in range(n, 0, -1):
        found = False
        for S in itertools.combinations(range(n), r):
            ok = True
            for lm in lms:
                if all(lm[i] == 0 or i in S for i in range(n)):
                    ok = False
                    break
            if ok:
                found = True
                break
        if found:
            best = r
            break
    return best - 1


# ----------------------------------------------------------------------
# Quotient algebra machinery (finite case)
# ----------------------------------------------------------------------


def _quotient_basis(G, syms) -> List[tuple]:
    """Monomial basis (staircase) of the quotient by a zero-dimensional ideal.

    Raises NotZeroDimensional when some variable has no pure power among the
    leading monomials (infinite staircase).
    """
    order = getattr(G, "order", None)
    oname = str(order) if order is not None else "grevlex"
    lms = _leading_monomials(G, syms, oname)
    n = len(syms)
    bounds = []
    for i in range(n):
        pures = [e[i] for e in lms if all(e[j] == 0 for j in range(n) if j != i)]
        if not pures:
            raise NotZeroDimensional("no pure power in leading ideal")
        bounds.append(min(pures))
    return [
        e
        for e in itertools.product(*[range(b) for b in bounds])
        if not any(all(e[i] >= lm[i] for i in range(n)) for lm in lms)
    ]


def _mult_matrix(G, syms, basis: List[tuple], h) -> DomainMatrix:
    """Matrix of multiplication by h on the quotient, over QQ_I."""
    idx = {m: i for i, m in enumerate(basis)}
    N = len(basis)
    rows = [[QQ_I.zero] * N for _ in range(N)]
    hp = sp.expand(h)
    for j, m in enumerate(basis):
        mono = sp.prod([v**e for v, e in zip(syms, m)])
        r = G.reduce(sp.expand(hp * mono))[1]
        if r == 0:
            continue
        pr = sp.Poly(r, *syms, domain=QQ_I)
        for mono2, coef in zip(pr.monoms(), pr.rep.coeffs()):
            rows[idx[tuple(mono2)]][j] = coef
    return DomainMatrix(rows, (N, N), QQ_I)


def _stable_rank(M: DomainMatrix) -> int:
    """rank(M^k) for k large: dimension of the part where M acts invertibly."""
    prev = M.shape[0]
    cur = M
    while True:
        r = cur.rank()
        if r == prev:
            return r
        prev = r
        cur = cur.matmul(M)


# ----------------------------------------------------------------------
# Genericity protocol
# ----------------------------------------------------------------------


def _nonzero_int(rng: random.Random) -> int:
    v = 0
    while v == 0:
        v = rng.randint(-97, 97)
    return v


def derived_seed(seed: int, attempt: int, arm: int) -> int:
    return seed * 1000003 + attempt * 2 + arm


def two_seed(compute, seed: int = 0, retries: int = 3) -> Tuple[object, Tuple[int, int]]:
    """Run a generic computation under two independent draws; values must agree.

    compute receives a random.Random and may raise GenericityError to signal a
    degenerate draw; attempts are bounded by retries.
    """
    last_err: Optional[Exception] = None
    for attempt in range(max(1, retries)):
        sa = derived_seed(seed, attempt, 0)
        sb = derived_seed(seed, attempt, 1)
        try:
            va = compute(random.Random(sa))
            vb = compute(random.Random(sb))
        except GenericityError as e:
            last_err = e
            continue
        if va == vb:
            return va, (sa, sb)
        last_err = GenericityError(f"seed disagreement: {va} != {vb}")
    raise GenericityError(f"generic draws exhausted after {retries} attempts: {last_err}")


def _dehomogenize(exprs, syms, cs):
    """Restrict to the affine chart c.v = 1, eliminating the last variable."""
    last = syms[-1]
    sub = (1 - sum(c * v for c, v in zip(cs, syms[:-1]))) / sp.Integer(cs[-1])
    return [sp.expand(sp.numer(sp.together(e.subs(last, sub)))) for e in exprs]


def _chart_count(exprs, syms, rng, check_hyperplane: bool) -> int:
    """Standard-monomial count of a zero-dimensional ideal in a generic chart."""
    for _ in range(8):
        cs = [_nonzero_int(rng) for _ in syms]
        if check_hyperplane:
            hyp = sum(c * v for c, v in zip(cs, syms))
            Gh = sp.groebner(list(exprs) + [hyp], *syms, domain=QQ_I, order="grevlex")
            try:
                _quotient_basis(Gh, syms)
            except NotZeroDimensional:
                continue
        aff = _dehomogenize(exprs, syms, cs)
        aff = [a for a in aff if a != 0]
        G = sp.groebner(aff, *syms[:-1], domain=QQ_I, order="grevlex")
        try:
            return len(_quotient_basis(G, syms[:-1]))
        except NotZeroDimensional:
            continue
    raise GenericityError("no usable affine chart found")


def degree_zero_dim(J: IdealHandle, seed: int = 0, retries: int = 3) -> int:
    """Total degree (length) of a zero-dimensional projective scheme."""
    dim = ideal_dimension(J)
    if dim == -1:
        return 0
    if dim != 0:
        raise NotZeroDimensional(f"projective dimension is {dim}, not 0")
    syms = sym_vars(J.arity)
    exprs = J.exprs()
    value, _ = two_seed(lambda rng: _chart_count(exprs, syms, rng, True), seed, retries)
    return value


def degree_dim_one(J: IdealHandle, seed: int = 0, retries: int = 3) -> int:
    """Degree of a one-dimensional projective scheme: points on a generic
    hyperplane section, counted with multiplicity."""
    dim = ideal_dimension(J)
    if dim != 1:
        raise NotZeroDimensional(f"projective dimension is {dim}, not 1")
    syms = sym_vars(J.arity)
    exprs = J.exprs()

    def compute(rng):
        hyp = sum(_nonzero_int(rng) * v for v in syms)
        return _chart_count(exprs + [hyp], syms, rng, False)

    value, _ = two_seed(compute, seed, retries)
    return value


def saturation_degree_once(
    jgens: Sequence[MultiPoly], kgens: Sequence[MultiPoly], rng: random.Random
) -> int:
    """Degree of (J : K^infinity) in one generic draw.

    Equals the stable rank of multiplication by a random K-combination on the
    finite quotient by J in a generic affine chart: points of V(J) where the
    combination vanishes (in particular all of V(K)) drop out of the rank.
    """
    arity = jgens[0].arity
    syms = sym_vars(arity)
    cs = [_nonzero_int(rng) for _ in syms]
    jexprs = _dehomogenize([to_sympy(g) for g in jgens], syms, cs)
    kexprs = _dehomogenize([to_sympy(g) for g in kgens], syms, cs)
    avs = syms[:-1]
    G = sp.groebner([e for e in jexprs if e != 0], *avs, domain=QQ_I, order="grevlex")
    try:
        basis = _quotient_basis(G, avs)
    except NotZeroDimensional:
        raise GenericityError("chart quotient not finite")
    h = sum(_nonzero_int(rng) * e for e in kexprs)
    M = _mult_matrix(G, avs, basis, h)
    return _stable_rank(M)


def saturation_degree(
    J: IdealHandle, K: IdealHandle, seed: int = 0, retries: int = 3
) -> Tuple[int, Tuple[int, int]]:
    """Two-seed certified degree of J : K^infinity (zero-dimensional part)."""
    return two_seed(lambda rng: saturation_degree_once(J.generators, K.generators, rng), seed, retries)


# ----------------------------------------------------------------------
# Saturation and intersection (elimination route)
# ----------------------------------------------------------------------


def _eliminate(exprs, keep_syms, extra) -> List:
    """Generators of the elimination ideal removing the auxiliary symbol."""
    G = sp.groebner(exprs, extra, *keep_syms, domain=QQ_I, order="lex")
    return [g for g in G.exprs if extra not in g.free_symbols]


def _saturate_single(exprs, syms, g) -> List:
    w = sp.Symbol("_w")
    return _eliminate(list(exprs) + [1 - w * g], syms, w)


def _intersect_exprs(e1, e2, syms) -> List:
    u = sp.Symbol("_u")
    mixed = [u * f for f in e1] + [(1 - u) * f for f in e2]
    return _eliminate(mixed, syms, u)


def saturate(J: IdealHandle, K: IdealHandle) -> IdealHandle:
    """J : K^infinity, intersecting the single-generator saturations."""
    syms = sym_vars(J.arity)
    jexprs = J.exprs()
    result = None
    for g in K.exprs():
        sat = _saturate_single(jexprs, syms, g)
        if not sat:
            sat = [sp.Integer(0)]
        result = sat if result is None else _intersect_exprs(result, sat, syms)
    gens = [from_sympy(e, J.arity) for e in result]
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("saturation produced the zero ideal")
    return IdealHandle(gens)


def ideal_intersection(J: IdealHandle, K: IdealHandle) -> IdealHandle:
    syms = sym_vars(J.arity)
    gens = _intersect_exprs(J.exprs(), K.exprs(), syms)
    return IdealHandle([from_sympy(e, J.arity) for e in gens])


# ----------------------------------------------------------------------
# Local multiplicity
# ----------------------------------------------------------------------


def _point_coords(P) -> Tuple[GaussianRational, ...]:
    coords = getattr(P, "coords", P)
    return tuple(GaussianRational.coerce(c) for c in coords)


def local_multiplicity_once(
    jgens: Sequence[MultiPoly], coords: Sequence[GaussianRational], rng: random.Random
) -> int:
    """Multiplicity of one generic draw: chart length minus the stable rank of
    multiplication by a random linear form vanishing only at the point."""
    arity = jgens[0].arity
    syms = sym_vars(arity)
    k = next(i for i, c in enumerate(coords) if c)
    inv = coords[k].inverse()
    affine = [c * inv for c in coords]
    chart_syms = syms[:k] + syms[k + 1 :]
    sub = {syms[k]: sp.Integer(1)}
    exprs = [sp.expand(to_sympy(g).subs(sub)) for g in jgens]
    exprs = [e for e in exprs if e != 0]
    G = sp.groebner(exprs, *chart_syms, domain=QQ_I, order="grevlex")
    try:
        basis = _quotient_basis(G, chart_syms)
    except NotZeroDimensional:
        raise GenericityError("chart quotient not finite")
    pvals = [affine[i] for i in range(arity) if i != k]
    ell = sum(
        _nonzero_int(rng) * (v - gr_to_sympy(p)) for v, p in zip(chart_syms, pvals)
    )
    M = _mult_matrix(G, chart_syms, basis, ell)
    return len(basis) - _stable_rank(M)


def local_multiplicity(
    J: IdealHandle, P, seed: int = 0, retries: int = 3
) -> MultiplicityResult:
    """Intersection multiplicity of the scheme V(J) at a Q(i)-rational point."""
    coords = _point_coords(P)
    value, _ = two_seed(
        lambda rng: local_multiplicity_once(J.generators, coords, rng), seed, retries
    )
    return MultiplicityResult(point=P, multiplicity=value)


# ----------------------------------------------------------------------
# Rational point extraction
# ----------------------------------------------------------------------


def _linear_roots_QQI(expr, var) -> List:
    """Roots in Q(i) of a univariate polynomial, via its linear factors."""
    P = sp.Poly(expr, var, domain=QQ_I)
    roots = []
    for f, _ in P.factor_list()[1]:
        if f.degree() == 1:
            a = f.nth(1)
            b = f.nth(0)
            roots.append(sp.expand(-b / a))
    return roots


def _affine_rational_solutions(exprs, avars) -> List[tuple]:
    """All Q(i)-rational solutions of a zero-dimensional affine system."""
    exprs = [sp.expand(e) for e in exprs]
    exprs = [e for e in exprs if e != 0]
    if not avars:
        return [()] if not exprs else []
    if not exprs:
        raise NotZeroDimensional("zero ideal is not zero-dimensional")
    G = sp.groebner(exprs, *avars, domain=QQ_I, order="lex")
    if any(e.is_number and e != 0 for e in G.exprs):
        return []
    last = avars[-1]
    uni = [g for g in G.exprs if g.free_symbols <= {last}]
    if not uni:
        raise NotZeroDimensional("no univariate eliminant")
    elim = uni[0]
    for u in uni[1:]:
        elim = sp.Poly(elim, last, domain=QQ_I).gcd(sp.Poly(u, last, domain=QQ_I)).as_expr()
    sols = []
    for r in _linear_roots_QQI(elim, last):
        sub = [sp.expand(e.subs(last, r)) for e in exprs]
        for tail in _affine_rational_solutions(sub, avars[:-1]):
            sols.append(tail + (r,))
    return sols


def rational_points_zero_dim(J: IdealHandle, seed: int = 0):
    """Q(i)-rational points of a zero-dimensional projective scheme.

    Returns (points, residual) where residual is the part of the total degree
    not accounted for by multiplicities at the rational points found (0 means
    the enumeration is scheme-theoretically complete).
    """
    from .geometry import ProjPoint

    arity = J.arity
    syms = sym_vars(arity)
    dim = ideal_dimension(J)
    if dim == -1:
        return [], 0
    if dim != 0:
        raise NotZeroDimensional(f"projective dimension is {dim}, not 0")
    exprs = J.exprs()
    points = []
    for k in range(arity):
        sub = {syms[i]: sp.Integer(0) for i in range(k)}
        sub[syms[k]] = sp.Integer(1)
        chart = [sp.expand(e.subs(sub)) for e in exprs]
        avars = list(syms[k + 1 :])
        if not avars:
            if all(e == 0 for e in chart):
                coords = [GaussianRational(0)] * k + [GaussianRational(1)]
                points.append(ProjPoint(coords))
            continue
        chart_nz = [e for e in chart if e != 0]
        if not chart_nz:
            continue
        for sol in _affine_rational_solutions(chart_nz, avars):
            coords = (
                [GaussianRational(0)] * k
                + [GaussianRational(1)]
                + [_gr_const(v) for v in sol]
            )
            points.append(ProjPoint(coords))
    points.sort(key=lambda p: str(p))
    total = degree_zero_dim(J, seed=seed)
    acc = 0
    for p in points:
        acc += local_multiplicity(J, p, seed=seed).multiplicity
    return points, total - acc


# ----------------------------------------------------------------------
# Polynomial gcd helpers (for common-factor extraction)
# ----------------------------------------------------------------------


def poly_gcd(polys: Sequence[MultiPoly]) -> MultiPoly:
    """Monic gcd of a family of polynomials over Q(i)."""
    nz = [p for p in polys if not p.is_zero()]
    if not nz:
        raise ValueError("gcd of zero polynomials")
    arity = nz[0].arity
    syms = sym_vars(arity)
    acc = sp.Poly(to_sympy(nz[0]), *syms, domain=QQ_I)
    for p in nz[1:]:
        acc = acc.gcd(sp.Poly(to_sympy(p), *syms, domain=QQ_I))
    return from_sympy(acc.as_expr(), arity).monic()


def exact_divide(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """p / q when the division is exact."""
    syms = sym_vars(p.arity)
    quo, rem = sp.div(to_sympy(p), to_sympy(q), *syms, domain=QQ_I)
    if sp.expand(rem) != 0:
        raise ValueError("division is not exact")
    return from_sympy(quo, p.arity)
