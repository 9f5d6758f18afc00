"""Exact rational linear programming (two-phase tableau simplex, Bland's rule).

Rows are kept as integer vectors scaled by an arbitrary positive factor, so
pivoting is fraction-free; only the final solution is converted to
``Fraction``. Meant for the small dense problems of Gröbner cone geometry,
where exact answers decide whether a facet is really there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    x: Optional[tuple] = None
    value: Optional[Fraction] = None


def _integer_row(values) -> List[int]:
    """Positive multiple of a rational vector with integer entries."""
    fr = [Fraction(v) for v in values]
    den = 1
    for a in fr:
        if a.denominator != 1:
            den = den * a.denominator // math.gcd(den, a.denominator)
    return [int(a * den) for a in fr]


def _reduce(row: List[int]) -> List[int]:
    g = 0
    for v in row:
        if v:
            g = math.gcd(g, v)
            if g == 1:
                return row
    return [v // g for v in row] if g > 1 else row


def maximize(c: Sequence, A_ub: Sequence[Sequence] = (), b_ub: Sequence = (),
             A_eq: Sequence[Sequence] = (), b_eq: Sequence = ()) -> LPResult:
    """Maximize ``c.x`` subject to ``A_ub x <= b_ub``, ``A_eq x = b_eq``, ``x >= 0``."""
    n = len(c)
    n_slack = len(A_ub)
    raw = []
    for i, (a, b) in enumerate(zip(A_ub, b_ub)):
        coeffs = [Fraction(v) for v in a] + [Fraction(0)] * n_slack
        coeffs[n + i] = Fraction(1)
        raw.append((coeffs, Fraction(b), i))
    for a, b in zip(A_eq, b_eq):
        raw.append(([Fraction(v) for v in a] + [Fraction(0)] * n_slack, Fraction(b), None))
    needs_art = [slack is None or b < 0 for _, b, slack in raw]
    n_art = sum(needs_art)
    width = n + n_slack + n_art

    rows, basis = [], []
    k = 0
    for (coeffs, b, slack), art in zip(raw, needs_art):
        if b < 0:
            coeffs, b = [-v for v in coeffs], -b
        coeffs = coeffs + [Fraction(0)] * n_art
        if art:
            coeffs[n + n_slack + k] = Fraction(1)
            basis.append(n + n_slack + k)
            k += 1
        else:
            basis.append(n + slack)
        rows.append(_reduce(_integer_row(coeffs + [b])))

    tab = _Tableau(rows, basis, width)
    art_cols = range(n + n_slack, width)
    if n_art:
        phase1 = [0] * width
        for j in art_cols:
            phase1[j] = -1
        tab.run(phase1)
        if tab.value(phase1) < 0:
            return LPResult(INFEASIBLE)
        tab.drive_out(art_cols)
        tab.forbid(art_cols)
    obj = _integer_row(list(c) + [0] * (n_slack + n_art))
    if tab.run(obj) == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = tuple(tab.solution()[:n])
    return LPResult(OPTIMAL, x, sum((Fraction(ci) * xi for ci, xi in zip(c, x)), Fraction(0)))


class _Tableau:
    """Rows ``row[:-1] . x = row[-1]``, each up to its own positive scale."""

    def __init__(self, rows: List[List[int]], basis: List[int], width: int):
        self.rows = rows
        self.basis = basis
        self.width = width
        self.allowed = [True] * width

    def forbid(self, cols):
        for j in cols:
            self.allowed[j] = False

    def solution(self) -> List[Fraction]:
        x = [Fraction(0)] * self.width
        for row, b in zip(self.rows, self.basis):
            x[b] = Fraction(row[-1], row[b])
        return x

    def value(self, c) -> Fraction:
        return sum((c[j] * v for j, v in enumerate(self.solution()) if c[j]), Fraction(0))

    def _objective_row(self, c) -> List[int]:
        # scaled reduced costs of -c: a negative entry j means column j improves c.x
        z = [-v for v in c] + [0]
        for row, b in zip(self.rows, self.basis):
            f = z[b]
            if f:
                p = row[b]
                z = _reduce([p * a - f * r for a, r in zip(z, row)])
        return z

    def _pivot(self, r: int, j: int, z: List[int]) -> List[int]:
        row = self.rows[r]
        p = row[j]
        if p < 0:
            row = [-v for v in row]
            p = -p
        self.rows[r] = row
        nz = [(i, v) for i, v in enumerate(row) if v]
        for k, other in enumerate(self.rows):
            f = other[j]
            if k == r or not f:
                continue
            new = [p * v for v in other]
            for i, v in nz:
                new[i] -= f * v
            self.rows[k] = _reduce(new)
        f = z[j]
        if f:
            new = [p * v for v in z]
            for i, v in nz:
                new[i] -= f * v
            z = _reduce(new)
        self.basis[r] = j
        return z

    def run(self, c) -> str:
        z = self._objective_row(c)
        while True:
            entering = next(
                (j for j in range(self.width) if self.allowed[j] and z[j] < 0), None
            )
            if entering is None:
                return OPTIMAL
            best = None
            for r, row in enumerate(self.rows):
                a = row[entering]
                if a <= 0:
                    continue
                if best is None:
                    best = r
                    continue
                # compare row[-1]/a with the incumbent ratio; ties go to the smaller basic index
                brow = self.rows[best]
                lhs = row[-1] * brow[entering]
                rhs = brow[-1] * a
                if lhs < rhs or (lhs == rhs and self.basis[r] < self.basis[best]):
                    best = r
            if best is None:
                return UNBOUNDED
            z = self._pivot(best, entering, z)

    def drive_out(self, artificial):
        art = set(artificial)
        r = 0
        while r < len(self.rows):
            if self.basis[r] in art:
                row = self.rows[r]
                j = next((j for j in range(self.width) if j not in art and row[j]), None)
                if j is None:
                    # redundant equality
                    del self.rows[r]
                    del self.basis[r]
                    continue
                self._pivot(r, j, [0] * (self.width + 1))
            r += 1
