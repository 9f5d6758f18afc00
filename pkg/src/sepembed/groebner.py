"""Division, Buchberger's algorithm and elimination.

Hot loops work on plain ``{exponent: Fraction}`` dicts; :class:`Polynomial`
objects are only built at the boundaries.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .exceptions import RingMismatchError, UnitIdealError
from .orderings import DegRevLex, Elim, TermOrdering, make_ordering
from .poly import Exponent, Polynomial, Ring, degrevlex_key

Terms = Dict[Exponent, Fraction]


class Ideal:
    """An ideal given by a generator list; the presentation is kept verbatim."""

    __slots__ = ("ring", "generators")

    def __init__(self, ring: Ring, generators: Iterable):
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = ring(g)
            elif not isinstance(g, Polynomial):
                g = ring.constant(g)
            if g.ring != ring:
                raise RingMismatchError(f"generator {g} is not in {ring}")
            gens.append(g)
        if not gens:
            raise ValueError("an ideal needs at least one generator (use 0 for the zero ideal)")
        self.ring = ring
        self.generators = tuple(gens)

    def is_zero(self) -> bool:
        return all(g.is_zero() for g in self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __eq__(self, other):
        # presentation equality; use reduced bases for ideal equality
        return (
            isinstance(other, Ideal)
            and self.ring == other.ring
            and self.generators == other.generators
        )

    def __hash__(self):
        return hash((self.ring, self.generators))

    def __repr__(self):
        return f"Ideal({self.ring!r}, [{', '.join(str(g) for g in self.generators)}])"


class _Elem:
    """A monic basis element prepared for division."""

    __slots__ = ("lt", "mask", "tail", "terms")

    def __init__(self, lt: Exponent, terms: Terms):
        self.lt = lt
        self.mask = _mask(lt)
        self.terms = terms
        self.tail = [(e, c) for e, c in terms.items() if e != lt]


def _mask(exp: Exponent) -> int:
    m = 0
    for i, e in enumerate(exp):
        if e:
            m |= 1 << i
    return m


def _find_divisor(m: Exponent, mmask: int, elems: Sequence[_Elem]) -> Optional[_Elem]:
    for g in elems:
        if g.mask & ~mmask:
            continue
        lt = g.lt
        for a, b in zip(m, lt):
            if a < b:
                break
        else:
            return g
    return None


def _reduce(f: Terms, elems: Sequence[_Elem], nkey, full: bool = True) -> Terms:
    """Normal remainder of ``f``; always reduces the largest reducible term next."""
    if not elems or not f:
        return dict(f)
    f = dict(f)
    heap = [(nkey(e), e) for e in f]
    heapq.heapify(heap)
    inheap = set(f)
    rem: Terms = {}
    while heap:
        _, m = heapq.heappop(heap)
        inheap.discard(m)
        c = f.pop(m, None)
        if c is None:
            continue
        g = _find_divisor(m, _mask(m), elems)
        if g is None:
            rem[m] = c
            if not full:
                rem.update(f)
                return rem
            continue
        q = tuple(a - b for a, b in zip(m, g.lt))
        for t, a in g.tail:
            e = tuple(x + y for x, y in zip(t, q))
            v = f.get(e)
            if v is None:
                f[e] = -c * a
                if e not in inheap:
                    heapq.heappush(heap, (nkey(e), e))
                    inheap.add(e)
            else:
                v -= c * a
                if v:
                    f[e] = v
                else:
                    del f[e]
    return rem


def _leading(f: Terms, key) -> Exponent:
    return max(f, key=key)


def _monic(f: Terms, lt: Exponent) -> Terms:
    c = f[lt]
    if c == 1:
        return f
    inv = 1 / c
    return {e: v * inv for e, v in f.items()}


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _coprime(a: Exponent, b: Exponent) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def _spoly(f: _Elem, g: _Elem, lcm: Exponent) -> Terms:
    mf = tuple(a - b for a, b in zip(lcm, f.lt))
    mg = tuple(a - b for a, b in zip(lcm, g.lt))
    out: Terms = {}
    for t, c in f.tail:
        out[tuple(x + y for x, y in zip(t, mf))] = c
    for t, c in g.tail:
        e = tuple(x + y for x, y in zip(t, mg))
        v = out.get(e, 0) - c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _is_constant(exp: Exponent) -> bool:
    return not any(exp)


def _groebner(polys: Iterable[Terms], ordering: TermOrdering) -> List[_Elem]:
    """Reduced Gröbner basis (monic, interreduced) of the given term dicts.

    Normal selection strategy with Gebauer-Möller pair pruning (which
    subsumes Buchberger's coprime and chain criteria).
    """
    key, nkey = ordering.key, ordering.nkey
    basis: List[_Elem] = []  # every element ever added; indices are stable
    active: List[int] = []
    pairs: Dict[Tuple[int, int], Exponent] = {}

    def add(h: Terms) -> None:
        lt = _leading(h, key)
        if _is_constant(lt):
            raise UnitIdealError("the ideal contains a nonzero constant")
        elem = _Elem(lt, _monic(h, lt))
        ih = len(basis)
        basis.append(elem)
        _update(ih)

    def _update(ih: int) -> None:
        nonlocal active, pairs
        mh = basis[ih].lt
        cand = [(ig, _lcm(mh, basis[ig].lt)) for ig in active]
        kept = []
        for k, (ig, l) in enumerate(cand):
            if _coprime(mh, basis[ig].lt):
                kept.append((ig, l))
                continue
            if any(_divides(l2, l) for _, l2 in cand[k + 1:]) or any(
                _divides(l2, l) for _, l2 in kept
            ):
                continue
            kept.append((ig, l))
        new_pairs = {(ig, ih): l for ig, l in kept if not _coprime(mh, basis[ig].lt)}
        old = {}
        for (i, j), l in pairs.items():
            if (
                _divides(mh, l)
                and _lcm(basis[i].lt, mh) != l
                and _lcm(basis[j].lt, mh) != l
            ):
                continue
            old[(i, j)] = l
        old.update(new_pairs)
        pairs = old
        active = [ig for ig in active if not _divides(mh, basis[ig].lt)] + [ih]

    inputs = [dict(p) for p in polys if p]
    inputs.sort(key=lambda p: key(_leading(p, key)))
    for f in inputs:
        h = _reduce(f, [basis[i] for i in active], nkey)
        if h:
            add(h)

    while pairs:
        (i, j), l = min(pairs.items(), key=lambda item: (key(item[1]), item[0]))
        del pairs[(i, j)]
        s = _spoly(basis[i], basis[j], l)
        if not s:
            continue
        h = _reduce(s, [basis[k] for k in active], nkey)
        if h:
            add(h)

    return _interreduce([basis[i] for i in active], ordering)


def _interreduce(elems: List[_Elem], ordering: TermOrdering) -> List[_Elem]:
    """Minimalise and fully interreduce a Gröbner basis; returns sorted elements."""
    lts = [g.lt for g in elems]
    minimal = [
        g
        for k, g in enumerate(elems)
        if not any(j != k and _divides(lts[j], g.lt) and (lts[j] != g.lt or j < k) for j in range(len(elems)))
    ]
    out = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        tail = _reduce(dict(g.tail), others, ordering.nkey)
        tail[g.lt] = Fraction(1)
        out.append(_Elem(g.lt, tail))
    out.sort(key=lambda g: degrevlex_key(g.lt))
    return out


class MarkedGB:
    """Marked reduced Gröbner basis: pairs ``(marked_lt, monic polynomial)``.

    ``ordering`` is a witness ordering consistent with the marking. Equality
    and hashing only look at the marked pairs, so two orderings that share a
    Gröbner cone give equal objects.
    """

    __slots__ = ("ring", "ordering", "elements", "_elems", "_key")

    def __init__(self, ordering: TermOrdering, elements: Iterable[Tuple[Sequence[int], Polynomial]], check: bool = True):
        self.ordering = ordering
        self.ring = ordering.ring
        pairs = []
        for lt, g in elements:
            lt = tuple(lt)
            if g.ring != self.ring:
                raise RingMismatchError(f"{g} is not in {self.ring}")
            pairs.append((lt, g))
        pairs.sort(key=lambda p: degrevlex_key(p[0]))
        self.elements = tuple(pairs)
        self._elems = None
        self._key = None
        if check:
            self._validate()

    @classmethod
    def from_polynomials(cls, polys: Iterable[Polynomial], ordering: TermOrdering, check: bool = True) -> "MarkedGB":
        """Mark each polynomial by its leading term under ``ordering`` and make it monic."""
        pairs = []
        for g in polys:
            if g.is_zero():
                continue
            lt = g.leading_term(ordering)
            pairs.append((lt, g.scale(1 / g.terms[lt])))
        return cls(ordering, pairs, check=check)

    @classmethod
    def _from_elems(cls, elems: List[_Elem], ordering: TermOrdering) -> "MarkedGB":
        ring = ordering.ring
        gb = cls(ordering, [(g.lt, Polynomial._raw(ring, g.terms)) for g in elems], check=False)
        return gb

    def _validate(self) -> None:
        key = self.ordering.key
        lts = [lt for lt, _ in self.elements]
        for lt, g in self.elements:
            if g.terms.get(lt) != 1:
                raise ValueError(f"marked term of {g} is missing or not monic")
            klt = key(lt)
            for t in g.terms:
                if t != lt and key(t) >= klt:
                    raise ValueError(f"marking of {g} is inconsistent with {self.ordering!r}")
                if any(_divides(m, t) for m in lts):
                    if t != lt:
                        raise ValueError(f"{g} is not interreduced")
        for i, a in enumerate(lts):
            for j, b in enumerate(lts):
                if i != j and _divides(a, b):
                    raise ValueError("marked terms are not pairwise non-dividing")

    # ------------------------------------------------------------------
    @property
    def lts(self) -> Tuple[Exponent, ...]:
        return tuple(lt for lt, _ in self.elements)

    @property
    def polynomials(self) -> Tuple[Polynomial, ...]:
        return tuple(g for _, g in self.elements)

    def division_elements(self) -> List[_Elem]:
        if self._elems is None:
            self._elems = [_Elem(lt, dict(g.terms)) for lt, g in self.elements]
        return self._elems

    def canonical_key(self) -> tuple:
        if self._key is None:
            self._key = tuple(
                (lt, tuple((e, c.numerator, c.denominator) for e, c in g.terms.items()))
                for lt, g in self.elements
            )
        return self._key

    def is_unit(self) -> bool:
        return any(_is_constant(lt) for lt in self.lts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MarkedGB):
            return NotImplemented
        return self.ring == other.ring and self.canonical_key() == other.canonical_key()

    def __hash__(self) -> int:
        return hash((self.ring, self.canonical_key()))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self) -> str:
        body = ", ".join(f"({self.ring.term_string(lt)}, {g})" for lt, g in self.elements)
        return f"MarkedGB{{{body}}}"

    def __getstate__(self):
        return (self.ordering, self.elements)

    def __setstate__(self, state):
        self.ordering, self.elements = state
        self.ring = self.ordering.ring
        self._elems = None
        self._key = None


def normal_form(f: Polynomial, gb: MarkedGB) -> Polynomial:
    if f.ring != gb.ring:
        raise RingMismatchError(f"{f.ring} vs {gb.ring}")
    rem = _reduce(f.terms, gb.division_elements(), gb.ordering.nkey)
    return Polynomial._raw(f.ring, rem)


def buchberger(ideal: Ideal, ordering="degrevlex") -> MarkedGB:
    """The reduced marked Gröbner basis of ``ideal`` under ``ordering``.

    Raises :class:`UnitIdealError` when 1 lies in the ideal.
    """
    ordering = make_ordering(ordering, ideal.ring)
    elems = _groebner((g.terms for g in ideal.generators), ordering)
    return MarkedGB._from_elems(elems, ordering)


def groebner_from_polynomials(polys: Iterable[Polynomial], ordering: TermOrdering) -> MarkedGB:
    elems = _groebner((g.terms for g in polys), ordering)
    return MarkedGB._from_elems(elems, ordering)


def interreduce_marked(pairs: Iterable[Tuple[Exponent, Polynomial]], ordering: TermOrdering) -> MarkedGB:
    """Interreduce a Gröbner basis whose marking follows ``ordering``."""
    elems = []
    for lt, g in pairs:
        terms = dict(g.terms)
        elems.append(_Elem(lt, _monic(terms, lt)))
    return MarkedGB._from_elems(_interreduce(elems, ordering), ordering)


def intersect_with_subring(ideal: Ideal, keep: Iterable[str], gb: MarkedGB = None) -> Ideal:
    """Generators of the intersection of ``ideal`` with Q[keep].

    Uses the reduced Gröbner basis for the elimination ordering of the
    complementary variables; ``gb`` may pass one in that was already computed.
    """
    ring = ideal.ring
    sub = ring.subring(keep)
    elim_vars = [v for v in ring.variables if v not in sub]
    if not elim_vars:
        return Ideal(sub, [g.to_ring(sub) for g in ideal.generators])
    if gb is None:
        gb = buchberger(ideal, Elim(ring, elim_vars))
    zi = [ring.index(v) for v in elim_vars]
    kept = []
    for lt, g in gb.elements:
        if any(lt[i] for i in zi):
            continue
        assert all(not any(e[i] for i in zi) for e in g.terms), "elimination ordering leaked"
        kept.append(g.to_ring(sub))
    return Ideal(sub, kept or [sub.zero()])


def ideal_membership(f: Polynomial, ideal: Ideal, gb: MarkedGB = None) -> bool:
    if f.ring != ideal.ring:
        raise RingMismatchError(f"{f.ring} vs {ideal.ring}")
    gb = gb or buchberger(ideal, DegRevLex(ideal.ring))
    return normal_form(f, gb).is_zero()
