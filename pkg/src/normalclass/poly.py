"""Sparse multivariate polynomials over Q(i).

A polynomial lives over a fixed variable tuple: ``(x, y, z, t)`` for surfaces
in P^3 (arity 4) or ``(x, y, z)`` for curves in P^2 (arity 3).  Terms are kept
in a dict keyed by exponent tuples; zero coefficients are never stored, so
equality is structural.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

from .arith import GaussianRational, Rational

Monomial = Tuple[int, ...]

VARS4 = ("x", "y", "z", "t")
VARS3 = ("x", "y", "z")


def variables(arity: int) -> Tuple[str, ...]:
    if arity == 4:
        return VARS4
    if arity == 3:
        return VARS3
    raise ValueError(f"unsupported arity {arity}")


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def grevlex_key(m: Monomial):
    """Sort key: graded reverse lexicographic, largest first when reversed."""
    return (sum(m), tuple(-e for e in reversed(m)))


_Coeff = Union[GaussianRational, Rational, int]


class MultiPoly:
    """Sparse polynomial in a fixed variable tuple over Q(i)."""

    __slots__ = ("terms", "arity")

    def __init__(self, terms: Mapping[Monomial, _Coeff], arity: int):
        clean: Dict[Monomial, GaussianRational] = {}
        for mono, c in terms.items():
            if len(mono) != arity:
                raise ValueError(f"monomial {mono} does not match arity {arity}")
            cc = GaussianRational.coerce(c)
            if cc:
                clean[tuple(mono)] = cc
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "arity", arity)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(arity: int) -> "MultiPoly":
        return MultiPoly({}, arity)

    @staticmethod
    def constant(c: _Coeff, arity: int) -> "MultiPoly":
        return MultiPoly({(0,) * arity: c}, arity)

    @staticmethod
    def variable(name: str, arity: int) -> "MultiPoly":
        names = variables(arity)
        idx = names.index(name)
        mono = tuple(1 if j == idx else 0 for j in range(arity))
        return MultiPoly({mono: 1}, arity)

    @staticmethod
    def gens(arity: int) -> Tuple["MultiPoly", ...]:
        return tuple(MultiPoly.variable(v, arity) for v in variables(arity))

    # -- basic queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(monomial_degree(m) == 0 for m in self.terms)

    def total_degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(monomial_degree(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {monomial_degree(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_degree(self) -> int:
        """Degree of a homogeneous polynomial (error if not homogeneous)."""
        if not self.is_homogeneous():
            raise ValueError("polynomial is not homogeneous")
        return self.total_degree()

    def coefficient(self, mono: Monomial) -> GaussianRational:
        return self.terms.get(tuple(mono), GaussianRational(0))

    def leading_term(self) -> Tuple[Monomial, GaussianRational]:
        """Largest term in grevlex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self.terms, key=grevlex_key)
        return mono, self.terms[mono]

    def depends_on(self, name: str) -> bool:
        idx = variables(self.arity).index(name)
        return any(m[idx] for m in self.terms)

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.arity != self.arity:
                raise ValueError("arity mismatch")
            return other
        return MultiPoly.constant(other, self.arity)

    def __add__(self, other) -> "MultiPoly":
        o = self._coerce(other)
        out = dict(self.terms)
        for m, c in o.terms.items():
            s = out.get(m)
            out[m] = c if s is None else s + c
        return MultiPoly(out, self.arity)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({m: -c for m, c in self.terms.items()}, self.arity)

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "MultiPoly":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "MultiPoly":
        o = self._coerce(other)
        out: Dict[Monomial, GaussianRational] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                c = c1 * c2
                s = out.get(m)
                out[m] = c if s is None else s + c
        return MultiPoly(out, self.arity)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = MultiPoly.constant(1, self.arity)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c: _Coeff) -> "MultiPoly":
        cc = GaussianRational.coerce(c)
        return MultiPoly({m: v * cc for m, v in self.terms.items()}, self.arity)

    def monic(self) -> "MultiPoly":
        """Divide by the grevlex leading coefficient."""
        if self.is_zero():
            return self
        _, lc = self.leading_term()
        return self.scale(lc.inverse())

    # -- calculus and evaluation --------------------------------------

    def partial_derivative(self, name: str) -> "MultiPoly":
        idx = variables(self.arity).index(name)
        out: Dict[Monomial, GaussianRational] = {}
        for m, c in self.terms.items():
            e = m[idx]
            if e == 0:
                continue
            m2 = tuple(v - 1 if j == idx else v for j, v in enumerate(m))
            out[m2] = out.get(m2, GaussianRational(0)) + c * e
        return MultiPoly(out, self.arity)

    def gradient(self) -> Tuple["MultiPoly", ...]:
        return tuple(self.partial_derivative(v) for v in variables(self.arity))

    def evaluate(self, point: Sequence[_Coeff]) -> GaussianRational:
        if len(point) != self.arity:
            raise ValueError("point arity mismatch")
        vals = [GaussianRational.coerce(p) for p in point]
        acc = GaussianRational(0)
        for m, c in self.terms.items():
            term = c
            for v, e in zip(vals, m):
                if e:
                    term = term * v**e
            acc = acc + term
        return acc

    def substitute(self, assignment: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Substitute polynomials for variables (unlisted variables unchanged).

        The replacement polynomials fix the arity of the result; they must all
        share one arity, which may differ from the input's.
        """
        if not assignment:
            return self
        arities = {p.arity for p in assignment.values()}
        if len(arities) > 1:
            raise ValueError("inconsistent arity in assignment")
        out_arity = arities.pop()
        names = variables(self.arity)
        images = []
        for j, v in enumerate(names):
            if v in assignment:
                images.append(assignment[v])
            else:
                if out_arity != self.arity:
                    raise ValueError(f"variable {v} has no image under arity change")
                images.append(MultiPoly.variable(v, out_arity))
        acc = MultiPoly.zero(out_arity)
        for m, c in self.terms.items():
            term = MultiPoly.constant(c, out_arity)
            for img, e in zip(images, m):
                if e:
                    term = term * img**e
            acc = acc + term
        return acc

    # -- comparison / rendering ---------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.arity == other.arity and self.terms == other.terms
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self == MultiPoly.constant(other, self.arity)
        return NotImplemented

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: grevlex_key(kv[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = variables(self.arity)
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for v, e in zip(names, m):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            mono_s = "*".join(factors)
            if not mono_s:
                parts.append(f"({c})" if c.im else str(c))
                continue
            if c == 1:
                parts.append(mono_s)
            elif c == -1:
                parts.append(f"-{mono_s}")
            elif c.im and c.re:
                parts.append(f"({c})*{mono_s}")
            else:
                parts.append(f"{c}*{mono_s}")
        s = parts[0]
        for p in parts[1:]:
            s += p if p.startswith("-") else "+" + p
        return s

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


def euler_check(f: MultiPoly) -> bool:
    """Check the Euler identity sum_v v*f_v = d*f for homogeneous f."""
    if not f.is_homogeneous():
        raise ValueError("Euler identity requires a homogeneous polynomial")
    d = f.total_degree()
    if d < 0:
        return True
    acc = MultiPoly.zero(f.arity)
    for v in variables(f.arity):
        acc = acc + MultiPoly.variable(v, f.arity) * f.partial_derivative(v)
    return (acc - f.scale(d)).is_zero()


# ----------------------------------------------------------------------
# Parser for the shared polynomial grammar:
#   variables per arity, operators + - * ^, parentheses, coefficients
#   "3", "3/2", "i" and combinations like 3/2+1/2*i.  No implicit
#   multiplication.
# ----------------------------------------------------------------------


class ParseError(ValueError):
    pass


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.tokens = []
        self._tokenize()
        self.idx = 0

    def _tokenize(self):
        text = self.text
        n = len(text)
        i = 0
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                self.tokens.append(("int", text[i:j]))
                i = j
                continue
            if ch.isalpha():
                self.tokens.append(("name", ch))
                i += 1
                continue
            if ch in "+-*/^()":
                self.tokens.append((ch, ch))
                i += 1
                continue
            raise ParseError(f"unexpected character {ch!r} at position {i}")

    def peek(self):
        return self.tokens[self.idx] if self.idx < len(self.tokens) else (None, None)

    def next(self):
        tok = self.peek()
        self.idx += 1
        return tok


def parse_poly(text: str, arity: int) -> MultiPoly:
    """Parse the CLI polynomial grammar into a MultiPoly."""
    names = variables(arity)
    tz = _Tokenizer(text)

    def parse_expr() -> MultiPoly:
        node = parse_term()
        while True:
            kind, _ = tz.peek()
            if kind == "+":
                tz.next()
                node = node + parse_term()
            elif kind == "-":
                tz.next()
                node = node - parse_term()
            else:
                return node

    def parse_term() -> MultiPoly:
        node = parse_factor()
        while True:
            kind, _ = tz.peek()
            if kind == "*":
                tz.next()
                node = node * parse_factor()
            elif kind == "/":
                tz.next()
                divisor = parse_factor()
                if not divisor.is_constant():
                    raise ParseError("division only by nonzero constants")
                c = divisor.coefficient((0,) * arity)
                if not c:
                    raise ParseError("division by zero")
                node = node.scale(c.inverse())
            else:
                return node

    def parse_factor() -> MultiPoly:
        kind, _ = tz.peek()
        if kind == "-":
            tz.next()
            return -parse_factor()
        if kind == "+":
            tz.next()
            return parse_factor()
        base = parse_primary()
        kind, _ = tz.peek()
        if kind == "^":
            tz.next()
            k2, v2 = tz.next()
            if k2 != "int":
                raise ParseError("exponent must be a nonnegative integer")
            return base ** int(v2)
        return base

    def parse_primary() -> MultiPoly:
        kind, val = tz.next()
        if kind == "int":
            return MultiPoly.constant(int(val), arity)
        if kind == "name":
            if val == "i":
                return MultiPoly.constant(GaussianRational(0, 1), arity)
            if val in names:
                return MultiPoly.variable(val, arity)
            raise ParseError(f"unknown variable {val!r} for arity {arity}")
        if kind == "(":
            node = parse_expr()
            k2, _ = tz.next()
            if k2 != ")":
                raise ParseError("unbalanced parenthesis")
            return node
        raise ParseError(f"unexpected token {val!r}")

    result = parse_expr()
    kind, val = tz.peek()
    if kind is not None:
        raise ParseError(f"trailing input at token {val!r}")
    return result
