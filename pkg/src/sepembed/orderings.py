"""Global term orderings.

Each ordering is bound to a :class:`~sepembed.poly.Ring` and exposes
``key(exp)``, a flat tuple of integers whose natural tuple order is the term
order. Keys are memoised per instance; Gröbner basis code calls them a lot.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Sequence

from .poly import Exponent, Ring, as_fraction, degrevlex_key


class TermOrdering:
    name = "ordering"

    def __init__(self, ring: Ring):
        self.ring = ring
        self._cache = {}
        self._ncache = {}

    def key(self, exp: Exponent) -> tuple:
        k = self._cache.get(exp)
        if k is None:
            k = self._cache[exp] = self._key(exp)
        return k

    def nkey(self, exp: Exponent) -> tuple:
        """Negated key; min-heaps pop the largest term first."""
        k = self._ncache.get(exp)
        if k is None:
            k = self._ncache[exp] = tuple(-a for a in self.key(exp))
        return k

    def _key(self, exp):
        raise NotImplementedError

    def restrict(self, subring: Ring) -> "TermOrdering":
        """The induced ordering on a subring (terms embedded by variable name)."""
        raise NotImplementedError

    def _params(self) -> tuple:
        return ()

    def __eq__(self, other) -> bool:
        return (
            type(self) is type(other)
            and self.ring == other.ring
            and self._params() == other._params()
        )

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.ring, self._params()))

    def __getstate__(self):
        return {"ring": self.ring, "params": self._params()}

    def __setstate__(self, state):
        self.__init__(state["ring"], *state["params"])

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.spec()})"

    def spec(self) -> str:
        return self.name


class Lex(TermOrdering):
    name = "lex"

    def _key(self, exp):
        return exp

    def restrict(self, subring):
        return Lex(subring)


class DegRevLex(TermOrdering):
    name = "degrevlex"

    def _key(self, exp):
        return degrevlex_key(exp)

    def restrict(self, subring):
        return DegRevLex(subring)


class Elim(TermOrdering):
    """Two-block elimination ordering for a variable set Z.

    Terms are compared by DegRevLex on the Z-block first and then by
    DegRevLex on the complement, so any term involving Z exceeds every
    Z-free term.
    """

    name = "elim"

    def __init__(self, ring: Ring, z: Iterable[str]):
        super().__init__(ring)
        zs = set(z)
        for v in zs:
            ring.index(v)
        if not zs:
            raise ValueError("Elim needs a nonempty variable set")
        self.z = tuple(v for v in ring.variables if v in zs)
        self._zi = tuple(ring.index(v) for v in self.z)
        self._yi = tuple(i for i in range(ring.n) if ring.variables[i] not in zs)

    def _params(self):
        return (self.z,)

    def _key(self, exp):
        ze = tuple(exp[i] for i in self._zi)
        ye = tuple(exp[i] for i in self._yi)
        return degrevlex_key(ze) + degrevlex_key(ye)

    def restrict(self, subring):
        kept = [v for v in self.z if v in subring]
        return Elim(subring, kept) if kept else DegRevLex(subring)

    def spec(self):
        return f"elim:{','.join(self.z)}"


class WeightMatrix(TermOrdering):
    """Matrix ordering: rational weight rows compared in turn, then Lex."""

    name = "weight"

    def __init__(self, ring: Ring, rows: Sequence[Sequence]):
        super().__init__(ring)
        int_rows = []
        for row in rows:
            row = [as_fraction(a) for a in row]
            if len(row) != ring.n:
                raise ValueError(f"weight row {row} has length != {ring.n}")
            den = 1
            for a in row:
                den = den * a.denominator // math.gcd(den, a.denominator)
            int_rows.append(tuple(int(a * den) for a in row))
        if not int_rows:
            raise ValueError("WeightMatrix needs at least one row")
        self.rows = tuple(int_rows)
        for i in range(ring.n):
            e = tuple(1 if j == i else 0 for j in range(ring.n))
            if self._key(e) <= self._key(ring.zero_exponent()):
                raise ValueError(
                    f"weight matrix is not a global ordering: {ring.variables[i]} < 1"
                )

    def _params(self):
        return (self.rows,)

    def _key(self, exp):
        return tuple(sum(w * e for w, e in zip(row, exp)) for row in self.rows) + exp

    def restrict(self, subring):
        idx = [self.ring.index(v) for v in subring.variables]
        return WeightMatrix(subring, [[row[i] for i in idx] for row in self.rows])

    def spec(self):
        rows = ";".join(",".join(str(a) for a in row) for row in self.rows)
        return f"weight:{rows}"


def compare_terms(ordering: TermOrdering, a: Sequence[int], b: Sequence[int]) -> int:
    """Return -1, 0 or 1 as term ``a`` is less than, equal to, or greater than ``b``."""
    a, b = tuple(a), tuple(b)
    n = ordering.ring.n
    if len(a) != n or len(b) != n:
        raise ValueError("exponent vectors do not match the ordering's ring")
    ka, kb = ordering.key(a), ordering.key(b)
    return (ka > kb) - (ka < kb)


_SPEC = re.compile(r"\s*(\w+)\s*(?:[:(]\s*(.*?)\s*\)?)?\s*\Z", re.S)


def make_ordering(spec, ring: Ring) -> TermOrdering:
    """Build an ordering from a short text spec.

    Accepted forms: ``lex``, ``degrevlex``, ``elim:y,z`` and
    ``weight:1,2,3;0,1,0`` (rows separated by ``;``, entries may be
    fractions like ``3/2``).
    """
    if isinstance(spec, TermOrdering):
        if spec.ring != ring:
            raise ValueError(f"ordering is bound to {spec.ring}, not {ring}")
        return spec
    m = _SPEC.match(spec)
    if not m:
        raise ValueError(f"bad ordering spec {spec!r}")
    kind, arg = m.group(1).lower(), m.group(2)
    if kind == "lex" and not arg:
        return Lex(ring)
    if kind in ("degrevlex", "drl") and not arg:
        return DegRevLex(ring)
    if kind == "elim" and arg:
        return Elim(ring, [v.strip() for v in arg.split(",") if v.strip()])
    if kind in ("weight", "weights", "matrix") and arg:
        rows = [[Fraction(a.strip()) for a in r.split(",")] for r in arg.split(";") if r.strip()]
        return WeightMatrix(ring, rows)
    raise ValueError(f"bad ordering spec {spec!r}")
