"""Command-line front end.

Parses polynomial input, dispatches the pipelines and emits deterministic
reports.  Exit codes: 0 success, 1 parse error, 2 hypothesis violation,
3 genericity exhaustion.
"""

from __future__ import annotations

import json
import random
import sys
from typing import Optional

import click

from .classes import (
    Census,
    census_surface_infinity,
    curve_report,
    quadric_table,
    surface_normal_class,
    theorem1_value,
)
from .geometry import HypothesisViolation, normal_polar, polar_generators, random_covector
from .groebner import (
    GenericityError,
    IdealHandle,
    derived_seed,
    ideal_dimension,
)
from .poly import MultiPoly, ParseError, parse_poly
from .schubert import ChowClass

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_HYPOTHESIS = 2
EXIT_GENERICITY = 3


def _emit(payload: dict, output: str):
    if output == "json":
        click.echo(json.dumps(payload, sort_keys=True, separators=(", ", ": ")))
    else:
        for k, v in payload.items():
            click.echo(f"{k}: {v}")


def _fail(code: int, message: str):
    click.echo(message, err=True)
    sys.exit(code)


def _point_json(P):
    return [str(c) for c in P.coords]


def _schubert_json(c: ChowClass):
    return {"sigma2": c.coefficient("s2"), "sigma11": c.coefficient("s11")}


def _census_json(c: Census):
    return {
        "d": c.d,
        "m_star": {str(k): v for k, v in sorted(c.m_star.items())},
        "m_tilde": {str(k): v for k, v in sorted(c.m_tilde.items())},
        "kappa_star": c.kappa_star,
        "kappa_tilde": c.kappa_tilde,
        "c_inf": c.c_inf,
        "unresolved": list(c.unresolved),
    }


def _surface_payload(text: str, seed: int, retries: int) -> dict:
    F = parse_poly(text, 4)
    rep = surface_normal_class(F, seed=seed, retries=retries)
    return {
        "input": text,
        "degree": rep.degree,
        "reduced": rep.reduced,
        "d_H": rep.d_H,
        "base_points": [
            {"point": _point_json(P), "tag": tag, "multiplicity": m}
            for P, tag, m in rep.base_points
        ],
        "residual": rep.residual_multiplicity,
        "normal_class": rep.normal_class,
        "schubert": _schubert_json(rep.schubert),
        "census": None,
        "certified": rep.ledger_checks(),
        "seeds_used": list(rep.seeds_used),
    }


def _curve_payload(text: str, seed: int, retries: int) -> dict:
    G = parse_poly(text, 3)
    rep = curve_report(G, seed=seed, retries=retries)
    return {
        "input": text,
        "degree": rep.d,
        "reduced": False,
        "d_H": 0,
        "base_points": [],
        "residual": 0,
        "normal_class": rep.c_nu_direct,
        "schubert": None,
        "census": None,
        "curve": {
            "dual_degree": rep.d_dual,
            "omega_inf": rep.omega_inf,
            "mu_I": rep.mu_I,
            "mu_J": rep.mu_J,
            "formula_value": rep.c_nu_formula,
        },
        "certified": rep.certified,
        "seeds_used": list(rep.seeds_used),
    }


def _run_single(builder, text: str, seed: int, retries: int, output: str):
    try:
        payload = builder(text, seed, retries)
    except ParseError as e:
        _fail(EXIT_PARSE, f"parse error: {e}")
    except HypothesisViolation as e:
        _fail(EXIT_HYPOTHESIS, f"hypothesis violation: {e}")
    except GenericityError as e:
        _fail(EXIT_GENERICITY, f"genericity exhausted: {e}")
    except ValueError as e:
        _fail(EXIT_HYPOTHESIS, f"invalid input: {e}")
    _emit(payload, output)


def _run_batch(builder, path: str, seed: int, retries: int, output: str):
    worst = EXIT_OK
    with open(path) as fh:
        lines = [line.strip() for line in fh if line.strip()]
    for text in lines:
        try:
            payload = builder(text, seed, retries)
        except ParseError as e:
            payload = {"input": text, "error": str(e)}
            worst = worst or EXIT_PARSE
        except HypothesisViolation as e:
            payload = {"input": text, "error": str(e)}
            worst = worst or EXIT_HYPOTHESIS
        except (GenericityError,) as e:
            payload = {"input": text, "error": str(e)}
            worst = worst or EXIT_GENERICITY
        except ValueError as e:
            payload = {"input": text, "error": str(e)}
            worst = worst or EXIT_HYPOTHESIS
        _emit(payload, output)
    sys.exit(worst)


def _common_options(fn):
    fn = click.option("--seed", default=0, show_default=True, help="master seed for generic draws")(fn)
    fn = click.option("--retries", default=3, show_default=True, help="bound on generic redraws")(fn)
    fn = click.option(
        "--output", type=click.Choice(["json", "text"]), default="json", show_default=True
    )(fn)
    return fn


@click.group()
def main():
    """Exact normal classes of surfaces in P^3 and curves in P^2."""


@main.command("surface-class")
@click.argument("poly", required=False)
@click.option("--batch", type=click.Path(exists=True), default=None, help="file with one input per line")
@_common_options
def surface_class(poly: Optional[str], batch: Optional[str], seed: int, retries: int, output: str):
    """Normal class of the surface V(POLY) in variables x, y, z, t."""
    if batch:
        _run_batch(_surface_payload, batch, seed, retries, output)
    if poly is None:
        _fail(EXIT_PARSE, "missing polynomial input")
    _run_single(_surface_payload, poly, seed, retries, output)


@main.command("curve-class")
@click.argument("poly", required=False)
@click.option("--batch", type=click.Path(exists=True), default=None, help="file with one input per line")
@_common_options
def curve_class(poly: Optional[str], batch: Optional[str], seed: int, retries: int, output: str):
    """Normal class of the plane curve V(POLY) in variables x, y, z."""
    if batch:
        _run_batch(_curve_payload, batch, seed, retries, output)
    if poly is None:
        _fail(EXIT_PARSE, "missing polynomial input")
    _run_single(_curve_payload, poly, seed, retries, output)


@main.command("census")
@click.argument("poly")
@_common_options
def census(poly: str, seed: int, retries: int, output: str):
    """Census of the curve at infinity and the closed-form class value."""

    def build(text, seed, retries):
        F = parse_poly(text, 4)
        cen = census_surface_infinity(F, seed=seed)
        certified = not cen.unresolved
        value = theorem1_value(cen) if certified else None
        return {
            "input": text,
            "degree": F.total_degree(),
            "census": _census_json(cen),
            "normal_class": value,
            "certified": certified,
            "seeds_used": [seed],
        }

    _run_single(build, poly, seed, retries, output)


@main.command("polar")
@click.argument("poly")
@_common_options
def polar(poly: str, seed: int, retries: int, output: str):
    """Degree and dimension of a generic normal polar of the surface."""

    def build(text, seed, retries):
        from .classes import _polar_ideal_degree

        F = parse_poly(text, 4)
        A = random_covector(random.Random(derived_seed(seed, 0, 0)))
        gens = [g for g in polar_generators(F, A) if not g.is_zero()]
        J = IdealHandle(gens)
        dim = ideal_dimension(J)
        deg = _polar_ideal_degree(F, gens, seed)
        return {
            "input": text,
            "degree": F.total_degree(),
            "polar_dimension": dim,
            "polar_degree": deg,
            "certified": True,
            "seeds_used": [derived_seed(seed, 0, 0)],
        }

    _run_single(build, poly, seed, retries, output)


@main.command("quadric-table")
@click.argument("form", type=click.Choice(["a", "b", "c", "d"]))
@click.argument("alpha")
@click.argument("beta", required=False)
@_common_options
def quadric_table_cmd(form: str, alpha: str, beta: Optional[str], seed: int, retries: int, output: str):
    """Normal class of the quadric family FORM with parameters."""

    def build(text, seed, retries):
        a = _parse_constant(alpha)
        b = _parse_constant(beta) if beta is not None else None
        value = quadric_table(form, a, b)
        return {
            "input": text,
            "form": form,
            "alpha": str(a),
            "beta": str(b) if b is not None else None,
            "normal_class": value,
            "certified": True,
            "seeds_used": [seed],
        }

    _run_single(build, f"{form} {alpha} {beta or ''}".strip(), seed, retries, output)


def _parse_constant(text: str):
    p = parse_poly(text, 3)
    if not p.is_constant():
        raise ParseError("expected a constant parameter")
    return p.coefficient((0, 0, 0))


_CHOW_NAMES = ("s00", "s1", "s2", "s11", "s21", "s22")


def _parse_chow(text: str) -> ChowClass:
    """Tiny parser for Chow ring expressions: s-classes, integers, + - * ^."""
    import re

    tokens = re.findall(r"s00|s11|s21|s22|s1|s2|\d+|[+\-*^()]|\S", text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take():
        nonlocal pos
        tok = peek()
        pos += 1
        return tok

    def expr():
        node = term()
        while peek() in ("+", "-"):
            op = take()
            rhs = term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def term():
        node = factor()
        while peek() == "*":
            take()
            node = node * factor()
        return node

    def factor():
        if peek() == "-":
            take()
            return -1 * factor()
        base = primary()
        if peek() == "^":
            take()
            n = take()
            if n is None or not n.isdigit():
                raise ParseError("exponent must be a nonnegative integer")
            out = ChowClass.basis("s00")
            for _ in range(int(n)):
                out = out * base
            return out
        return base

    def primary():
        tok = take()
        if tok is None:
            raise ParseError("unexpected end of input")
        if tok in _CHOW_NAMES:
            return ChowClass.basis(tok)
        if tok.isdigit():
            return int(tok) * ChowClass.basis("s00")
        if tok == "(":
            node = expr()
            if take() != ")":
                raise ParseError("unbalanced parenthesis")
            return node
        raise ParseError(f"unexpected token {tok!r}")

    node = expr()
    if peek() is not None:
        raise ParseError(f"trailing input at {peek()!r}")
    return node


@main.command("chow")
@click.argument("expr")
@_common_options
def chow(expr: str, seed: int, retries: int, output: str):
    """Evaluate a product/sum of Schubert classes in G(1,3)."""

    def build(text, seed, retries):
        value = _parse_chow(text)
        payload = {"input": text}
        names = {"s00": "sigma00", "s1": "sigma1", "s2": "sigma2",
                 "s11": "sigma11", "s21": "sigma21", "s22": "sigma22"}
        for short, long in names.items():
            c = value.coefficient(short)
            if c:
                payload[long] = c
        return payload

    _run_single(build, expr, seed, retries, output)


if __name__ == "__main__":
    main()
