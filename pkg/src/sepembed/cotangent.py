"""Linear parts of polynomials and ideals at a rational point; Zariski
cotangent and tangent spaces.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

from .exceptions import NotContainedInMaximalIdealError
from .groebner import Ideal
from .linalg import nullspace, rref
from .poly import Polynomial, Ring, as_fraction

Point = Tuple[Fraction, ...]


def as_point(point, ring: Ring) -> Point:
    if point is None:
        return (Fraction(0),) * ring.n
    pt = tuple(as_fraction(a) for a in point)
    if len(pt) != ring.n:
        raise ValueError(f"point {pt} does not have {ring.n} coordinates")
    return pt


def _translate(f: Polynomial, point: Point, sign: int) -> Polynomial:
    if not any(point):
        return f
    ring = f.ring
    images = {v: ring.gen(v) + sign * a for v, a in zip(ring.variables, point)}
    return f.substitute(images, ring)


def shift_to_origin(f: Polynomial, point) -> Polynomial:
    """f(x + a), written in the same variable names."""
    return _translate(f, as_point(point, f.ring), 1)


def shift_from_origin(f: Polynomial, point) -> Polynomial:
    """Inverse of :func:`shift_to_origin`: f(x - a)."""
    return _translate(f, as_point(point, f.ring), -1)


def gradient_at(f: Polynomial, point) -> List[Fraction]:
    pt = as_point(point, f.ring)
    n = f.ring.n
    grad = [Fraction(0)] * n
    for exp, c in f.terms.items():
        for i, e in enumerate(exp):
            if not e:
                continue
            v = c * e
            for j, (a, k) in enumerate(zip(pt, exp)):
                kk = k - 1 if j == i else k
                if kk:
                    v *= a ** kk
                    if not v:
                        break
            grad[i] += v
    return grad


def _affine_linear(ring: Ring, coeffs: Sequence[Fraction], point: Point) -> Polynomial:
    terms = {}
    const = Fraction(0)
    for i, (c, a) in enumerate(zip(coeffs, point)):
        if c:
            terms[tuple(1 if j == i else 0 for j in range(ring.n))] = c
            const -= c * a
    if const:
        terms[ring.zero_exponent()] = const
    return Polynomial._raw(ring, terms)


def linear_part(f: Polynomial, point=None) -> Polynomial:
    """The linear part of f at the point: sum_i df/dx_i(p) * (x_i - a_i).

    This is the degree-one component of f(x + a) translated back; a nonzero
    value of f at the point is simply dropped.
    """
    pt = as_point(point, f.ring)
    return _affine_linear(f.ring, gradient_at(f, pt), pt)


class LinearSpace:
    """Span of linear forms in the shifted variables (x_i - a_i).

    Stored in reduced row echelon form, pivots following the ring order, so
    two presentations of the same space compare equal.
    """

    __slots__ = ("ring", "point", "rows", "pivots")

    def __init__(self, ring: Ring, point, vectors: Sequence[Sequence]):
        self.ring = ring
        self.point = as_point(point, ring)
        vecs = [list(v) for v in vectors if any(v)]
        self.rows, self.pivots = rref(vecs) if vecs else ([], [])
        self.rows = [tuple(r) for r in self.rows]

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def basis(self) -> List[Polynomial]:
        return [_affine_linear(self.ring, r, self.point) for r in self.rows]

    def pivot_variables(self) -> List[str]:
        return [self.ring.variables[j] for j in self.pivots]

    def support_variables(self) -> List[str]:
        """Variables with a nonzero coefficient in some basis element, ring order."""
        used = {j for r in self.rows for j, c in enumerate(r) if c}
        return [v for j, v in enumerate(self.ring.variables) if j in used]

    def contains(self, ell: Polynomial) -> bool:
        vec = gradient_at(ell, self.point)
        if (ell.total_degree() > 1) or ell.evaluate(self.point):
            return False
        return LinearSpace(self.ring, self.point, list(self.rows) + [vec]).dim == self.dim

    def __eq__(self, other):
        return (
            isinstance(other, LinearSpace)
            and self.ring == other.ring
            and self.point == other.point
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ring, self.point, tuple(self.rows)))

    def __repr__(self):
        return f"LinearSpace<{', '.join(str(b) for b in self.basis)}>"


def _check_contained(ideal: Ideal, point: Point) -> None:
    for g in ideal.generators:
        if g.evaluate(point):
            raise NotContainedInMaximalIdealError(
                f"generator {g} does not vanish at {tuple(str(a) for a in point)}", g
            )


def linear_part_ideal(ideal: Ideal, point=None) -> LinearSpace:
    """Linear part of the ideal at the point, spanned by the generators' linear parts."""
    pt = as_point(point, ideal.ring)
    _check_contained(ideal, pt)
    return LinearSpace(ideal.ring, pt, [gradient_at(g, pt) for g in ideal.generators])


def cotangent_dim(ideal: Ideal, point=None) -> int:
    return ideal.ring.n - linear_part_ideal(ideal, point).dim


def tangent_space(ideal: Ideal, point=None) -> List[Tuple[Fraction, ...]]:
    """Basis of the directions v with l(p + v) = 0 for every l in the linear part."""
    lin = linear_part_ideal(ideal, point)
    return [tuple(v) for v in nullspace(lin.rows, ideal.ring.n)]
