"""Exact arithmetic in the Chow ring of the Grassmannian of lines in P^3.

The ring is a free graded Z-module on {s00, s1, s2, s11, s21, s22} with the
classical relations: s1*s1 = s2 + s11, s1*s2 = s1*s11 = s21, s2*s2 =
s11*s11 = s1*s21 = s22, s2*s11 = 0, and everything above degree 4 is zero.
The congruence of normal lines of a surface is a*s2 + b*s11.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Mapping

BASIS = ("s00", "s1", "s2", "s11", "s21", "s22")

DEGREE = {"s00": 0, "s1": 1, "s2": 2, "s11": 2, "s21": 3, "s22": 4}

_TABLE: Dict[tuple, Dict[str, int]] = {
    ("s1", "s1"): {"s2": 1, "s11": 1},
    ("s1", "s2"): {"s21": 1},
    ("s1", "s11"): {"s21": 1},
    ("s1", "s21"): {"s22": 1},
    ("s2", "s2"): {"s22": 1},
    ("s11", "s11"): {"s22": 1},
    ("s2", "s11"): {},
    ("s1", "s22"): {},
    ("s2", "s21"): {},
    ("s11", "s21"): {},
    ("s2", "s22"): {},
    ("s11", "s22"): {},
    ("s21", "s21"): {},
    ("s21", "s22"): {},
    ("s22", "s22"): {},
}


def _basis_product(a: str, b: str) -> Dict[str, int]:
    if a == "s00":
        return {b: 1}
    if b == "s00":
        return {a: 1}
    key = (a, b) if (a, b) in _TABLE else (b, a)
    return _TABLE[key]


@dataclass(frozen=True)
class ChowClass:
    """An integer combination of Schubert classes in G(1,3)."""

    coefficients: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for k, v in self.coefficients.items():
            if k not in BASIS:
                raise ValueError(f"unknown basis class {k!r}")
            if v:
                clean[k] = int(v)
        object.__setattr__(self, "coefficients", clean)

    @staticmethod
    def basis(name: str) -> "ChowClass":
        return ChowClass({name: 1})

    @staticmethod
    def zero() -> "ChowClass":
        return ChowClass({})

    def coefficient(self, name: str) -> int:
        return self.coefficients.get(name, 0)

    def __add__(self, other: "ChowClass") -> "ChowClass":
        out = dict(self.coefficients)
        for k, v in other.coefficients.items():
            out[k] = out.get(k, 0) + v
        return ChowClass(out)

    def __neg__(self) -> "ChowClass":
        return ChowClass({k: -v for k, v in self.coefficients.items()})

    def __sub__(self, other: "ChowClass") -> "ChowClass":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return ChowClass({k: v * other for k, v in self.coefficients.items()})
        out: Dict[str, int] = {}
        for a, ca in self.coefficients.items():
            for b, cb in other.coefficients.items():
                for k, m in _basis_product(a, b).items():
                    out[k] = out.get(k, 0) + ca * cb * m
        return ChowClass(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChowClass):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(frozenset(self.coefficients.items()))

    def graded_pieces(self) -> Dict[int, "ChowClass"]:
        out: Dict[int, Dict[str, int]] = {}
        for k, v in self.coefficients.items():
            out.setdefault(DEGREE[k], {})[k] = v
        return {d: ChowClass(c) for d, c in out.items()}

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for k in BASIS:
            v = self.coefficients.get(k)
            if v:
                parts.append(f"{v}*{k}")
        return " + ".join(parts).replace("+ -", "- ")


def chow_mul(u: ChowClass, v: ChowClass) -> ChowClass:
    return u * v


S00 = ChowClass.basis("s00")
S1 = ChowClass.basis("s1")
S2 = ChowClass.basis("s2")
S11 = ChowClass.basis("s11")
S21 = ChowClass.basis("s21")
S22 = ChowClass.basis("s22")


def surface_schubert_class(c_nu: int, d: int, d_tilde: int) -> ChowClass:
    """Class of the congruence of normal lines: c_nu*s2 + d*(d_tilde-1)*s11.

    d_tilde = d when the base locus is finite on the surface; d - deg H after
    removing a two-dimensional component V(H).
    """
    return ChowClass({"s2": c_nu, "s11": d * (d_tilde - 1)})
