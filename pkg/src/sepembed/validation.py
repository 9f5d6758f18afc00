"""Input coercion for the estimator front end."""

from __future__ import annotations

from fractions import Fraction
from typing import Tuple

from .exceptions import RingMismatchError
from .groebner import Ideal
from .io import Problem
from .poly import Polynomial, Ring


def check_ideal(X, ring: Ring = None) -> Ideal:
    """Accept an Ideal, a Problem, or a sequence of polynomials.

    Strings need ``ring``; Polynomial generators must share one ring.
    """
    if isinstance(X, Ideal):
        if ring is not None and X.ring != ring:
            raise RingMismatchError(f"ideal lives in {X.ring}, expected {ring}")
        return X
    if isinstance(X, Problem):
        return X.ideal
    if isinstance(X, (str, Polynomial)):
        X = [X]
    gens = list(X)
    if not gens:
        raise ValueError("an ideal needs at least one generator")
    if ring is None:
        rings = {g.ring for g in gens if isinstance(g, Polynomial)}
        if len(rings) != 1:
            raise ValueError("pass ring= or give Polynomial generators from a single ring")
        ring = rings.pop()
    return Ideal(ring, gens)


def check_point(point, ring: Ring) -> Tuple[Fraction, ...]:
    if point is None:
        return (Fraction(0),) * ring.n
    if isinstance(point, str):
        point = point.split(",")
    pt = []
    for a in point:
        if isinstance(a, float):
            raise TypeError(f"point coordinates must be exact, got float {a!r}")
        pt.append(Fraction(a.strip() if isinstance(a, str) else a))
    if len(pt) != ring.n:
        raise ValueError(f"point has {len(pt)} coordinates, ring has {ring.n} variables")
    return tuple(pt)


def check_polynomials(X, ring: Ring):
    if isinstance(X, (str, Polynomial)):
        X = [X]
    out = []
    for f in X:
        if isinstance(f, str):
            f = ring(f)
        elif f.ring != ring:
            raise RingMismatchError(f"{f} is not in {ring}")
        out.append(f)
    return out
