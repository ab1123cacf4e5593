"""Geometric constructions for normal lines of surfaces in P^3.

The normal direction n_S(m) = [F_x:F_y:F_z:0], the Pluecker map alpha of the
normal-line congruence, the antisymmetric nu array and the normal polar
ideals cut out by A o nu_i, the base locus with its trichotomy (singular
points, contacts at infinity, umbilical contacts), reduced polars when the
base locus has a two-dimensional part, and projective similitudes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .arith import GaussianRational
from .groebner import (
    GenericityError,
    IdealHandle,
    exact_divide,
    ideal_dimension,
    local_multiplicity,
    poly_gcd,
    rational_points_zero_dim,
)
from .poly import MultiPoly


class HypothesisViolation(ValueError):
    """Input falls outside the hypotheses of the applicable theorem."""


# ----------------------------------------------------------------------
# Projective points
# ----------------------------------------------------------------------


class ProjPoint:
    """A point of P^2 or P^3 with Q(i) coordinates, canonicalized so the
    first nonzero coordinate is 1."""

    __slots__ = ("coords",)

    def __init__(self, coords: Sequence):
        cs = tuple(GaussianRational.coerce(c) for c in coords)
        if len(cs) not in (3, 4):
            raise ValueError("projective points have 3 or 4 coordinates")
        pivot = next((c for c in cs if c), None)
        if pivot is None:
            raise ValueError("all coordinates are zero")
        inv = pivot.inverse()
        object.__setattr__(self, "coords", tuple(c * inv for c in cs))

    def __setattr__(self, name, value):
        raise AttributeError("ProjPoint is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __str__(self) -> str:
        return "[" + ":".join(str(c) for c in self.coords) + "]"

    def __repr__(self) -> str:
        return f"ProjPoint({self})"


# ----------------------------------------------------------------------
# The Pluecker map alpha and the nu array
# ----------------------------------------------------------------------


def _grads(F: MultiPoly):
    return (
        F.partial_derivative("x"),
        F.partial_derivative("y"),
        F.partial_derivative("z"),
    )


def normal_direction(F: MultiPoly, m: ProjPoint) -> Optional[ProjPoint]:
    """The point at infinity [F_x:F_y:F_z:0] of the normal at m, or None
    when the three partials vanish there."""
    vals = [g.evaluate(m.coords) for g in _grads(F)]
    if not any(vals):
        return None
    return ProjPoint(vals + [GaussianRational(0)])


def build_alpha(F: MultiPoly) -> Tuple[MultiPoly, ...]:
    """Pluecker coordinates of the normal line of V(F), six polynomials."""
    x, y, z, t = MultiPoly.gens(4)
    Fx, Fy, Fz = _grads(F)
    return (
        x * Fy - y * Fx,
        x * Fz - z * Fx,
        -t * Fx,
        y * Fz - z * Fy,
        -t * Fy,
        -t * Fz,
    )


def plucker_relation(w: Sequence[MultiPoly]) -> MultiPoly:
    """w1*w6 - w2*w5 + w3*w4; vanishes identically on the image of alpha."""
    return w[0] * w[5] - w[1] * w[4] + w[2] * w[3]


def build_nu(F: MultiPoly) -> List[List[MultiPoly]]:
    """The antisymmetric 4x4 array whose columns cut out the normal line."""
    x, y, z, t = MultiPoly.gens(4)
    Fx, Fy, Fz = _grads(F)
    zero = MultiPoly.zero(4)
    c1 = [zero, -t * Fz, t * Fy, y * Fz - z * Fy]
    c2 = [t * Fz, zero, -t * Fx, z * Fx - x * Fz]
    c3 = [-t * Fy, t * Fx, zero, x * Fy - y * Fx]
    c4 = [z * Fy - y * Fz, x * Fz - z * Fx, y * Fx - x * Fy, zero]
    cols = [c1, c2, c3, c4]
    return [[cols[j][i] for j in range(4)] for i in range(4)]


def polar_generators(F: MultiPoly, A: Sequence) -> List[MultiPoly]:
    """The four polynomials A o nu_i; their A-weighted sum is identically 0."""
    Acs = [GaussianRational.coerce(a) for a in A]
    nu = build_nu(F)
    gens = []
    for j in range(4):
        acc = MultiPoly.zero(4)
        for i in range(4):
            acc = acc + nu[i][j].scale(Acs[i])
        gens.append(acc)
    return gens


@dataclass
class PolarSystem:
    """The normal polar data of a surface for one covector A."""

    F: MultiPoly
    alpha: Tuple[MultiPoly, ...]
    nu: List[List[MultiPoly]]
    A: Tuple[GaussianRational, ...]
    polar_generators: List[MultiPoly]


def polar_system(F: MultiPoly, A: Sequence) -> PolarSystem:
    Acs = tuple(GaussianRational.coerce(a) for a in A)
    if not any(Acs):
        raise ValueError("A must be a nonzero covector")
    return PolarSystem(
        F=F,
        alpha=build_alpha(F),
        nu=build_nu(F),
        A=Acs,
        polar_generators=polar_generators(F, Acs),
    )


def normal_polar(F: MultiPoly, A: Sequence) -> IdealHandle:
    """Ideal of the normal polar: points whose normal line meets delta(A)."""
    gens = [g for g in polar_generators(F, A) if not g.is_zero()]
    return IdealHandle(gens)


def random_covector(rng: random.Random) -> Tuple[int, int, int, int]:
    """Generic A with all four entries nonzero (so three nu-polars generate)."""

    def nz():
        v = 0
        while v == 0:
            v = rng.randint(-97, 97)
        return v

    return (nz(), nz(), nz(), nz())


# ----------------------------------------------------------------------
# Base locus
# ----------------------------------------------------------------------


@dataclass
class BaseLocusReport:
    base_ideal: IdealHandle
    dim_B: int
    H: Optional[MultiPoly]
    points_on_S: List[Tuple[ProjPoint, str]]
    residual: int


def _tag_base_point(F: MultiPoly, P: ProjPoint) -> str:
    Fx, Fy, Fz = _grads(F)
    Ft = F.partial_derivative("t")
    vx = Fx.evaluate(P.coords)
    vy = Fy.evaluate(P.coords)
    vz = Fz.evaluate(P.coords)
    if not (vx or vy or vz):
        if Ft.evaluate(P.coords):
            return "contact-at-infinity"
        return "singular"
    n = ProjPoint([vx, vy, vz, GaussianRational(0)])
    if n == P:
        return "umbilical-contact"
    raise HypothesisViolation(f"base point {P} escapes the trichotomy")


def base_ideal(F: MultiPoly, seed: int = 0) -> BaseLocusReport:
    """Base locus of the normal-line map, restricted to S and classified.

    Points of B off S are ignored; when B is a surface the common factor H of
    alpha is reported and the caller must route to the reduced pipeline.
    """
    alpha = build_alpha(F)
    B = IdealHandle(list(alpha))
    dim_B = ideal_dimension(B)
    if dim_B >= 2:
        H = poly_gcd(alpha)
        if H.is_constant():
            raise HypothesisViolation("two-dimensional base locus without a common factor")
        return BaseLocusReport(base_ideal=B, dim_B=dim_B, H=H, points_on_S=[], residual=0)
    BS = IdealHandle(list(alpha) + [F])
    dim_BS = ideal_dimension(BS)
    if dim_BS >= 1:
        raise HypothesisViolation("base locus meets the surface in positive dimension")
    if dim_BS == -1:
        return BaseLocusReport(base_ideal=B, dim_B=dim_B, H=None, points_on_S=[], residual=0)
    points, residual = rational_points_zero_dim(BS, seed=seed)
    tagged = [(P, _tag_base_point(F, P)) for P in points]
    return BaseLocusReport(
        base_ideal=B, dim_B=dim_B, H=None, points_on_S=tagged, residual=residual
    )


def reduced_alpha(F: MultiPoly) -> Tuple[MultiPoly, Tuple[MultiPoly, ...]]:
    """Common factor H of alpha and the reduced map alpha/H (dim B = 2 case)."""
    alpha = build_alpha(F)
    if ideal_dimension(IdealHandle(list(alpha))) != 2:
        raise HypothesisViolation("reduced alpha requires a two-dimensional base locus")
    H = poly_gcd(alpha)
    if H.is_constant():
        raise ValueError("two-dimensional base locus with constant gcd")
    return H, tuple(exact_divide(a, H) for a in alpha)


# ----------------------------------------------------------------------
# Similitudes
# ----------------------------------------------------------------------


def _mat_mul3(A, B):
    return tuple(
        tuple(sum((A[i][k] * B[k][j] for k in range(3)), GaussianRational(0)) for j in range(3))
        for i in range(3)
    )


def _mat_transpose3(A):
    return tuple(tuple(A[j][i] for j in range(3)) for i in range(3))


@dataclass(frozen=True)
class Similitude:
    """An affine orthogonal similitude X -> A X + b with A A^T = lambda Id."""

    A: Tuple[Tuple[GaussianRational, ...], ...]
    b: Tuple[GaussianRational, ...]

    @staticmethod
    def create(A, b) -> "Similitude":
        Am = tuple(tuple(GaussianRational.coerce(c) for c in row) for row in A)
        bv = tuple(GaussianRational.coerce(c) for c in b)
        if len(Am) != 3 or any(len(r) != 3 for r in Am) or len(bv) != 3:
            raise ValueError("similitude needs a 3x3 matrix and a 3-vector")
        P = _mat_mul3(Am, _mat_transpose3(Am))
        lam = P[0][0]
        if not lam:
            raise ValueError("similitude ratio is zero")
        for i in range(3):
            for j in range(3):
                want = lam if i == j else GaussianRational(0)
                if P[i][j] != want:
                    raise ValueError("matrix is not an orthogonal similitude")
        return Similitude(A=Am, b=bv)

    @property
    def ratio(self) -> GaussianRational:
        return _mat_mul3(self.A, _mat_transpose3(self.A))[0][0]

    @staticmethod
    def identity() -> "Similitude":
        one, zero = GaussianRational(1), GaussianRational(0)
        return Similitude.create(
            ((one, zero, zero), (zero, one, zero), (zero, zero, one)), (zero, zero, zero)
        )


def apply_similitude(F: MultiPoly, s: Similitude) -> MultiPoly:
    """Equation of the image surface: F composed with the inverse map."""
    lam_inv = s.ratio.inverse()
    At = _mat_transpose3(s.A)
    # inverse of the affine map: X -> A^T (X - b t) / lambda, t -> t
    x, y, z, t = MultiPoly.gens(4)
    coords = (x, y, z)
    images = {}
    for i, name in enumerate(("x", "y", "z")):
        acc = MultiPoly.zero(4)
        for j in range(3):
            acc = acc + coords[j].scale(At[i][j] * lam_inv)
        acc = acc - t.scale(
            sum((At[i][j] * s.b[j] for j in range(3)), GaussianRational(0)) * lam_inv
        )
        images[name] = acc
    images["t"] = t
    result = F.substitute(images)
    # clear the 1/lambda powers for tidier output
    return result.monic()


def _inv3(M):
    """Exact inverse of a 3x3 Fraction matrix via cofactors."""

    def det3(N):
        return (
            N[0][0] * (N[1][1] * N[2][2] - N[1][2] * N[2][1])
            - N[0][1] * (N[1][0] * N[2][2] - N[1][2] * N[2][0])
            + N[0][2] * (N[1][0] * N[2][1] - N[1][1] * N[2][0])
        )

    d = det3(M)
    if not d:
        raise ZeroDivisionError("singular matrix")
    inv = [[Fraction(0)] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            rows = [k for k in range(3) if k != j]
            cols = [k for k in range(3) if k != i]
            m2 = (
                M[rows[0]][cols[0]] * M[rows[1]][cols[1]]
                - M[rows[0]][cols[1]] * M[rows[1]][cols[0]]
            )
            inv[i][j] = ((-1) ** (i + j)) * m2 / d
    return tuple(tuple(row) for row in inv)


def random_similitude(rng: random.Random) -> Similitude:
    """A rational similitude: Cayley transform of a skew matrix, scaled."""

    def fr():
        return Fraction(rng.randint(-9, 9), rng.randint(1, 9))

    p, q, r = fr(), fr(), fr()
    S = (
        (Fraction(0), p, q),
        (-p, Fraction(0), r),
        (-q, -r, Fraction(0)),
    )
    # (I - S)(I + S)^{-1} is orthogonal for skew S (I + S never singular here)
    IpS = tuple(
        tuple(Fraction(int(i == j)) + S[i][j] for j in range(3)) for i in range(3)
    )
    ImS = tuple(
        tuple(Fraction(int(i == j)) - S[i][j] for j in range(3)) for i in range(3)
    )
    inv = _inv3(IpS)
    Q = tuple(
        tuple(sum(ImS[i][k] * inv[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )
    lam = Fraction(0)
    while not lam:
        lam = fr()
    A = tuple(tuple(lam * Q[i][j] for j in range(3)) for i in range(3))
    b = (fr(), fr(), fr())
    return Similitude.create(A, b)


def base_point_multiplicities(
    F: MultiPoly, polar: IdealHandle, report: BaseLocusReport, seed: int = 0
):
    """Local multiplicities i_P of (F) + polar at each tagged base point."""
    J = IdealHandle([F] + list(polar.generators))
    out = []
    for P, tag in report.points_on_S:
        m = local_multiplicity(J, P, seed=seed)
        out.append((P, tag, m.multiplicity))
    return out
