"""Defining equations of a border basis scheme from an order ideal.

The ideal is generated by the entries of the pairwise commutators of the
generic multiplication matrices; the c-variable ``c{i}{j}`` is the coefficient
of the i-th order ideal term in the j-th border prenormal form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .groebner import Ideal
from .orderings import DegRevLex
from .poly import Exponent, Polynomial, Ring, degrevlex_key


def _parse_term(text: str, ring: Ring) -> Exponent:
    p = ring(text)
    if len(p.terms) != 1 or p.coeff(next(iter(p.terms))) != 1:
        raise ValueError(f"{text!r} is not a term")
    return next(iter(p.terms))


class OrderIdeal:
    """A finite set of terms closed under taking divisors, in a fixed order."""

    def __init__(self, ring: Ring, terms: Sequence):
        self.ring = ring
        exps = [t if isinstance(t, tuple) else _parse_term(str(t), ring) for t in terms]
        if len(set(exps)) != len(exps):
            raise ValueError("repeated term in order ideal")
        members = set(exps)
        if ring.zero_exponent() not in members:
            raise ValueError("order ideal must contain 1")
        for e in exps:
            if len(e) != ring.n:
                raise ValueError(f"exponent {e} has wrong length")
            for i, a in enumerate(e):
                if a and e[:i] + (a - 1,) + e[i + 1:] not in members:
                    raise ValueError(f"{ring.term_string(e)} has a divisor outside the order ideal")
        self.terms: Tuple[Exponent, ...] = tuple(exps)

    def __len__(self):
        return len(self.terms)

    def __contains__(self, exp):
        return exp in set(self.terms)

    def __repr__(self):
        return "OrderIdeal{" + ", ".join(self.ring.term_string(t) for t in self.terms) + "}"


def _times(exp: Exponent, k: int) -> Exponent:
    return exp[:k] + (exp[k] + 1,) + exp[k + 1:]


def border(order_ideal: OrderIdeal) -> List[Exponent]:
    """Terms one multiplication step outside the order ideal, DegRevLex ascending."""
    members = set(order_ideal.terms)
    out = {_times(t, k) for t in order_ideal.terms for k in range(order_ideal.ring.n)}
    return sorted(out - members, key=degrevlex_key)


def c_name(i: int, j: int) -> str:
    return f"c{i}{j}" if i < 10 and j < 10 else f"c{i}_{j}"


@dataclass
class BBSPresentation:
    order_ideal: OrderIdeal
    border: List[Exponent]
    c_ring: Ring
    generators: List[Polynomial]

    def ideal(self) -> Ideal:
        return Ideal(self.c_ring, self.generators or [self.c_ring.zero()])

    def c_var(self, i: int, j: int) -> str:
        return c_name(i, j)


def _normalize(p: Polynomial, ordering) -> Polynomial:
    content = 0
    for c in p.terms.values():
        content = math.gcd(content, c.numerator)
    lt = p.leading_term(ordering)
    if p.terms[lt] < 0:
        content = -content
    return p.scale(Fraction(1, content)) if content != 1 else p


def multiplication_matrices(order_ideal: OrderIdeal, c_ring: Ring,
                            bdr: List[Exponent]) -> List[List[List[Polynomial]]]:
    mu = len(order_ideal)
    pos = {t: i for i, t in enumerate(order_ideal.terms)}
    bpos = {b: j for j, b in enumerate(bdr)}
    zero, one = c_ring.zero(), c_ring.one()
    mats = []
    for k in range(order_ideal.ring.n):
        a = [[zero] * mu for _ in range(mu)]
        for col, t in enumerate(order_ideal.terms):
            s = _times(t, k)
            if s in pos:
                a[pos[s]][col] = one
            else:
                j = bpos[s]
                for row in range(mu):
                    a[row][col] = c_ring.gen(c_name(row + 1, j + 1))
        mats.append(a)
    return mats


def _matmul(a, b, zero):
    mu = len(a)
    out = []
    for i in range(mu):
        row = []
        for j in range(mu):
            acc = zero
            for k in range(mu):
                if a[i][k].is_zero() or b[k][j].is_zero():
                    continue
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def bbs_ideal(order_ideal: OrderIdeal) -> BBSPresentation:
    bdr = border(order_ideal)
    mu, nu = len(order_ideal), len(bdr)
    c_ring = Ring([c_name(i, j) for i in range(1, mu + 1) for j in range(1, nu + 1)])
    ordering = DegRevLex(c_ring)
    mats = multiplication_matrices(order_ideal, c_ring, bdr)
    zero = c_ring.zero()
    gens: List[Polynomial] = []
    seen = set()
    for k in range(len(mats)):
        for l in range(k + 1, len(mats)):
            ab = _matmul(mats[k], mats[l], zero)
            ba = _matmul(mats[l], mats[k], zero)
            for i in range(mu):
                for j in range(mu):
                    g = ab[i][j] - ba[i][j]
                    if g.is_zero():
                        continue
                    g = _normalize(g, ordering)
                    if g not in seen:
                        seen.add(g)
                        gens.append(g)
    return BBSPresentation(order_ideal, bdr, c_ring, gens)
