"""Chow ring of the Grassmannian of lines in P^3."""

import random

import pytest

from normalclass.schubert import (
    S00,
    S1,
    S11,
    S2,
    S21,
    S22,
    BASIS,
    DEGREE,
    ChowClass,
    chow_mul,
    surface_schubert_class,
)


def test_multiplication_table():
    assert S1 * S1 == S2 + S11
    assert S1 * S2 == S21
    assert S1 * S11 == S21
    assert S2 * S2 == S22
    assert S11 * S11 == S22
    assert S2 * S11 == ChowClass.zero()
    assert S1 * S21 == S22
    assert S22 * S1 == ChowClass.zero()
    assert S00 * S21 == S21


def test_pairing_extraction():
    rng = random.Random(0)
    for _ in range(10):
        a, b = rng.randint(-50, 50), rng.randint(-50, 50)
        n = a * S2 + b * S11
        assert chow_mul(n, S2) == a * S22
        assert chow_mul(n, S11) == b * S22


def _random_class(rng):
    return ChowClass({k: rng.randint(-5, 5) for k in BASIS})


def test_commutative_associative():
    rng = random.Random(1)
    for _ in range(20):
        u, v, w = _random_class(rng), _random_class(rng), _random_class(rng)
        assert u * v == v * u
        assert (u * v) * w == u * (v * w)


def test_grading():
    rng = random.Random(2)
    for _ in range(10):
        u, v = _random_class(rng), _random_class(rng)
        for du, pu in u.graded_pieces().items():
            for dv, pv in v.graded_pieces().items():
                prod = pu * pv
                for d in prod.graded_pieces():
                    assert d == du + dv


def test_surface_class_assembly():
    # degree-2 surface with no corrections: 6*s2 + 2*s11
    assert surface_schubert_class(6, 2, 2) == ChowClass({"s2": 6, "s11": 2})
    # generic cubic: 21*s2 + 6*s11
    assert surface_schubert_class(21, 3, 3) == ChowClass({"s2": 21, "s11": 6})
    # sphere after removing the plane factor: 2*s2 + 0*s11
    assert surface_schubert_class(2, 2, 1) == ChowClass({"s2": 2})


def test_rejects_unknown_basis():
    with pytest.raises(ValueError):
        ChowClass({"s3": 1})


def test_degrees():
    assert DEGREE["s00"] == 0 and DEGREE["s22"] == 4
    assert DEGREE["s2"] == DEGREE["s11"] == 2
