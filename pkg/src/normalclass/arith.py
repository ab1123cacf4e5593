"""Exact arithmetic over the Gaussian rationals Q(i).

Q(i) is the coefficient field of the whole engine: it is the smallest field
containing the coordinates of every special point the computations touch
(cyclic points [1:i:0], [1:-i:0] and the umbilic points [1:+-i:0:0]).

Rationals are ``fractions.Fraction`` (arbitrary precision, always in lowest
terms with positive denominator, which is exactly the canonical form we need).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rational = Fraction

_Scalar = Union["GaussianRational", Rational, int]


class GaussianRational:
    """An element re + im*i of Q(i), immutable and hashable."""

    __slots__ = ("re", "im")

    re: Fraction
    im: Fraction

    def __init__(self, re: _Scalar = 0, im=0):
        if isinstance(re, GaussianRational):
            if im:
                raise TypeError("cannot combine GaussianRational with extra imaginary part")
            object.__setattr__(self, "re", re.re)
            object.__setattr__(self, "im", re.im)
            return
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def i() -> "GaussianRational":
        return GaussianRational(0, 1)

    @staticmethod
    def coerce(v: _Scalar) -> "GaussianRational":
        if isinstance(v, GaussianRational):
            return v
        return GaussianRational(v)

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_rational(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- field operations ---------------------------------------------

    def __add__(self, other: _Scalar) -> "GaussianRational":
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other: _Scalar) -> "GaussianRational":
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other: _Scalar) -> "GaussianRational":
        return GaussianRational.coerce(other) + (-self)

    def __mul__(self, other: _Scalar) -> "GaussianRational":
        o = GaussianRational.coerce(other)
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """|a|^2 = a * conj(a), a nonnegative rational."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if not n:
            raise ZeroDivisionError("division by zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other: _Scalar) -> "GaussianRational":
        return self * GaussianRational.coerce(other).inverse()

    def __rtruediv__(self, other: _Scalar) -> "GaussianRational":
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "GaussianRational":
        if n < 0:
            return self.inverse() ** (-n)
        out = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparison / hashing -----------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (GaussianRational, Fraction, int)):
            o = GaussianRational.coerce(other)
            return self.re == o.re and self.im == o.im
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- rendering ----------------------------------------------------

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        im = self.im
        if im == 1:
            im_s = "i"
        elif im == -1:
            im_s = "-i"
        else:
            im_s = f"{im}*i"
        if not self.re:
            return im_s
        sign = "+" if im > 0 else ""
        return f"{self.re}{sign}{im_s}"

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!r}, {self.im!r})"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
