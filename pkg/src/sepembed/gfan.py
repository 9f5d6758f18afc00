"""Restricted Gröbner fan: cones, facets, flips and breadth-first traversal.

Cones live in the closed non-negative orthant. A cone is described by the
inequalities ``d . w >= 0`` with ``d = exp(marked_lt) - exp(t)`` for each tail
term ``t``; facets on coordinate hyperplanes are never flipped.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from . import lp
from .exceptions import CapExceededError, FlipOnBoundaryError, MarkingInconsistentError
from .groebner import (
    Ideal,
    MarkedGB,
    buchberger,
    groebner_from_polynomials,
    interreduce_marked,
    normal_form,
)
from .orderings import DegRevLex, TermOrdering, WeightMatrix
from .poly import Polynomial

IntVector = Tuple[int, ...]


def primitive(vec: Sequence) -> IntVector:
    """Smallest positive integer multiple of a rational vector."""
    fr = [Fraction(v) for v in vec]
    den = 1
    for a in fr:
        den = den * a.denominator // math.gcd(den, a.denominator)
    ints = [int(a * den) for a in fr]
    g = 0
    for a in ints:
        g = math.gcd(g, a)
    return tuple(a // g for a in ints) if g else tuple(ints)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class Facet:
    normal: IntVector  # inner normal: the cone satisfies normal . w >= 0
    interior_point: IntVector
    on_orthant_boundary: bool


def _relative_interior(constraints: List[IntVector], n: int, tight: Optional[int]) -> Optional[IntVector]:
    """Point with every constraint strictly positive, except ``tight`` which is
    held at zero. ``None`` if no such point exists."""
    c = [0] * n + [1]
    A_ub, b_ub = [], []
    for k, d in enumerate(constraints):
        if k == tight:
            continue
        A_ub.append([-x for x in d] + [1])
        b_ub.append(0)
    A_eq = [[1] * n + [0]]
    b_eq = [1]
    if tight is not None:
        A_eq.append(list(constraints[tight]) + [0])
        b_eq.append(0)
    res = lp.maximize(c, A_ub, b_ub, A_eq, b_eq)
    if res.status != lp.OPTIMAL or res.value <= 0:
        return None
    return primitive(res.x[:n])


def _in_cone(target: IntVector, gens: List[IntVector]) -> bool:
    """Whether ``target`` is a nonnegative combination of ``gens``."""
    if not gens:
        return not any(target)
    n = len(target)
    A_eq = [[g[i] for g in gens] for i in range(n)]
    res = lp.maximize([0] * len(gens), A_eq=A_eq, b_eq=list(target))
    return res.status == lp.OPTIMAL


class GroebnerCone:
    """The closed cone of weight vectors whose initial ideal matches a marking."""

    def __init__(self, gb: MarkedGB):
        self.gb = gb
        n = gb.ring.n
        self.n = n
        raw = set()
        for lt, g in gb.elements:
            for t in g.terms:
                if t == lt:
                    continue
                d = primitive([a - b for a, b in zip(lt, t)])
                if all(x >= 0 for x in d):
                    continue  # implied by the orthant
                raw.add(d)
        units = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
        self._constraints = cons = sorted(raw) + units
        k0 = len(cons) - n
        # For a full-dimensional pointed cone a normal is a facet normal
        # exactly when it is not in the cone spanned by the others.
        # d >= e componentwise makes d redundant given e and the orthant
        undominated = [
            k for k, d in enumerate(cons)
            if not any(j != k and all(a >= b for a, b in zip(d, e)) for j, e in enumerate(cons))
        ]
        keep = [k for k in undominated
                if not _in_cone(cons[k], [cons[j] for j in undominated if j != k])]
        irredundant = [cons[k] for k in keep]
        w = _relative_interior(irredundant, n, None)
        if w is None or any(_dot(d, w) <= 0 for d in cons):
            raise MarkingInconsistentError(f"no strictly positive weight realises {gb!r}")
        self.witness = w
        self._irredundant = [(cons[k], k >= k0) for k in keep]
        self._facets = None

    @property
    def facets(self) -> List[Facet]:
        if self._facets is None:
            normals = [d for d, _ in self._irredundant]
            self._facets = [
                Facet(d, _relative_interior(normals, self.n, i), boundary)
                for i, (d, boundary) in enumerate(self._irredundant)
            ]
        return self._facets

    @property
    def inequalities(self) -> List[IntVector]:
        """Irredundant inner normals, not counting the orthant's own walls."""
        return [d for d, boundary in self._irredundant if not boundary]

    def contains(self, w: Sequence, strict: bool = False) -> bool:
        if any(x < 0 or (strict and x == 0) for x in w):
            return False
        cons = [d for d, boundary in self._irredundant if not boundary]
        if strict:
            return all(_dot(d, w) > 0 for d in cons)
        return all(_dot(d, w) >= 0 for d in cons)

    def __repr__(self):
        return f"GroebnerCone(witness={self.witness}, inequalities={self.inequalities})"


def groebner_cone(gb: MarkedGB) -> GroebnerCone:
    return GroebnerCone(gb)


def facets(cone: GroebnerCone) -> List[Facet]:
    return cone.facets


def initial_form(g: Polynomial, w: Sequence[int]) -> Polynomial:
    top = max(_dot(w, e) for e in g.terms)
    return Polynomial._raw(g.ring, {e: c for e, c in g.terms.items() if _dot(w, e) == top})


def flip(gb: MarkedGB, facet: Facet) -> MarkedGB:
    """The marked reduced Gröbner basis on the other side of an interior facet."""
    if facet.on_orthant_boundary:
        raise FlipOnBoundaryError("cannot flip across a wall of the orthant")
    ring = gb.ring
    w = facet.interior_point
    target = WeightMatrix(ring, [w, [-x for x in facet.normal]])
    initial = [initial_form(g, w) for g in gb.polynomials]
    h_gb = groebner_from_polynomials(initial, target)
    lifted = []
    for lt, h in h_gb.elements:
        lifted.append((lt, h - normal_form(h, gb)))
    return interreduce_marked(lifted, target)


def li_set(gb: MarkedGB) -> FrozenSet[str]:
    """Variables that occur as a marked leading term of degree one."""
    return frozenset(gb.ring.variables[lt.index(1)] for lt in gb.lts if sum(lt) == 1)


@dataclass
class GroebnerFan:
    ideal: Ideal
    cones: List[GroebnerCone]
    classes: Dict[FrozenSet[str], List[int]] = field(default_factory=dict)

    def __post_init__(self):
        if not self.classes:
            self.classes = li_classes(self)

    def __len__(self):
        return len(self.cones)

    @property
    def max_li(self) -> int:
        return max((len(s) for s in self.classes), default=0)

    def separating_classes(self) -> Dict[FrozenSet[str], List[int]]:
        """Classes with a nonempty LI set; each gives a separating re-embedding."""
        return {s: idx for s, idx in self.classes.items() if s}

    def maximal_classes(self) -> Dict[FrozenSet[str], List[int]]:
        m = self.max_li
        return {s: idx for s, idx in self.classes.items() if len(s) == m}

    def representatives(self) -> Dict[FrozenSet[str], MarkedGB]:
        return {s: self.cones[idx[0]].gb for s, idx in self.classes.items()}

    def export(self) -> str:
        """Line-oriented text dump, one cone per line."""
        ring = self.ideal.ring
        lines = []
        for i, cone in enumerate(self.cones):
            li = ",".join(v for v in ring.variables if v in li_set(cone.gb))
            lts = ";".join(ring.term_string(lt) for lt in cone.gb.lts)
            w = ",".join(str(a) for a in cone.witness)
            lines.append(f"cone {i}\tli={{{li}}}\tlts={lts}\twitness={w}")
        return "\n".join(lines) + "\n"


def li_classes(fan: GroebnerFan) -> Dict[FrozenSet[str], List[int]]:
    """Cone indices grouped by leading-indeterminate set, in discovery order."""
    classes: Dict[FrozenSet[str], List[int]] = {}
    for i, cone in enumerate(fan.cones):
        classes.setdefault(li_set(cone.gb), []).append(i)
    return classes


def _flip_task(args):
    gb, facet = args
    return flip(gb, facet)


def enumerate_gfan(ideal: Ideal, cap: int = 10_000, start: TermOrdering = None,
                   threads: int = 1) -> GroebnerFan:
    """All marked reduced Gröbner bases of the ideal, by flipping across
    interior facets breadth-first from the ``start`` ordering (DegRevLex).

    Raises :class:`CapExceededError` once more than ``cap`` cones are found;
    the exception's ``partial`` attribute holds the fan found so far.
    """
    ring = ideal.ring
    gb0 = buchberger(ideal, start or DegRevLex(ring))
    cones = [GroebnerCone(gb0)]
    seen = {gb0.canonical_key(): 0}
    layer = [0]
    pool = ProcessPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        while layer:
            tasks = []
            for ci in layer:
                cone = cones[ci]
                for facet in cone.facets:
                    if facet.on_orthant_boundary:
                        continue
                    w = facet.interior_point
                    # the neighbour is the only other known cone containing w
                    if any(j != ci and d.contains(w) for j, d in enumerate(cones)):
                        continue
                    tasks.append((cone.gb, facet))
            results = pool.map(_flip_task, tasks) if pool else map(_flip_task, tasks)
            nxt = []
            for gb in results:
                key = gb.canonical_key()
                if key in seen:
                    continue
                seen[key] = len(cones)
                nxt.append(len(cones))
                cones.append(GroebnerCone(gb))
                if len(cones) > cap:
                    raise CapExceededError(
                        f"Gröbner fan has more than {cap} cones",
                        partial=GroebnerFan(ideal, cones),
                    )
            layer = nxt
    finally:
        if pool:
            pool.shutdown()
    return GroebnerFan(ideal, cones)


def sepdim(ideal: Ideal, fan: GroebnerFan = None, cap: int = 10_000) -> Tuple[int, MarkedGB]:
    """n minus the largest leading-indeterminate set over the fan, with a witness."""
    fan = fan or enumerate_gfan(ideal, cap=cap)
    best = max(range(len(fan.cones)), key=lambda i: (len(li_set(fan.cones[i].gb)), -i))
    gb = fan.cones[best].gb
    return ideal.ring.n - len(li_set(gb)), gb
