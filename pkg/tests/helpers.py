"""Shared test data and independent oracles (sympy based)."""

import functools
from fractions import Fraction
from pathlib import Path

import sympy

from sepembed import Polynomial, enumerate_gfan, read_problem

DATA = Path(__file__).parent / "data"


def problem(name):
    return read_problem(DATA / f"{name}.ideal")


@functools.lru_cache(maxsize=None)
def example_ideal(name):
    return problem(name).ideal


@functools.lru_cache(maxsize=None)
def example_fan(name):
    return enumerate_gfan(example_ideal(name))


def sym_gens(ring):
    return sympy.symbols(list(ring.variables))


def to_sympy(f: Polynomial):
    gens = sym_gens(f.ring)
    terms = {exp: sympy.Rational(c.numerator, c.denominator) for exp, c in f.terms.items()}
    if not terms:
        return sympy.Poly(0, *gens, domain="QQ")
    return sympy.Poly.from_dict(terms, *gens, domain="QQ")


def from_sympy(p, ring) -> Polynomial:
    p = sympy.Poly(p, *sym_gens(ring), domain="QQ")
    terms = {}
    for exp, c in p.terms():
        c = sympy.Rational(c)
        terms[tuple(exp)] = Fraction(int(c.p), int(c.q))
    return Polynomial(ring, terms)


def sympy_groebner(polys, ring, order):
    gens = sym_gens(ring)
    gb = sympy.groebner([to_sympy(f).as_expr() for f in polys], *gens, order=order, domain="QQ")
    return {from_sympy(g, ring) for g in gb.exprs}
