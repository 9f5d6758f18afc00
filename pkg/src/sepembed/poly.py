"""Rings, exponent vectors and sparse polynomials with rational coefficients."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .exceptions import RingMismatchError, ZeroPolynomialError

Exponent = Tuple[int, ...]

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def degrevlex_key(exp: Exponent) -> tuple:
    """Sort key for the degree reverse lexicographic ordering (x1 > ... > xn)."""
    return (sum(exp),) + tuple(-e for e in reversed(exp))


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


class Ring:
    """Polynomial ring Q[x_1, ..., x_n] with a fixed variable order."""

    __slots__ = ("variables", "_index")

    def __init__(self, variables: Iterable[str]):
        if isinstance(variables, str):
            variables = [v.strip() for v in variables.split(",")]
        names = tuple(variables)
        for name in names:
            if not isinstance(name, str) or not _IDENT.match(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.variables = names
        self._index = {v: i for i, v in enumerate(names)}

    @property
    def n(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"{name!r} is not a variable of {self}") from None

    def __contains__(self, name) -> bool:
        return name in self._index

    def __eq__(self, other) -> bool:
        return isinstance(other, Ring) and self.variables == other.variables

    def __hash__(self) -> int:
        return hash(("Ring", self.variables))

    def __repr__(self) -> str:
        return f"Ring({', '.join(self.variables)})"

    def __getstate__(self):
        return self.variables

    def __setstate__(self, state):
        self.variables = state
        self._index = {v: i for i, v in enumerate(state)}

    def __call__(self, text: str) -> "Polynomial":
        from .parser import parse_polynomial

        return parse_polynomial(text, self)

    def zero_exponent(self) -> Exponent:
        return (0,) * self.n

    def unit_exponent(self, name: str) -> Exponent:
        i = self.index(name)
        return tuple(1 if j == i else 0 for j in range(self.n))

    def gen(self, name: str) -> "Polynomial":
        return Polynomial(self, {self.unit_exponent(name): 1})

    @property
    def gens(self) -> Tuple["Polynomial", ...]:
        return tuple(self.gen(v) for v in self.variables)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {self.zero_exponent(): c})

    def monomial(self, exp: Sequence[int], coeff=1) -> "Polynomial":
        exp = tuple(exp)
        if len(exp) != self.n or any(e < 0 for e in exp):
            raise ValueError(f"bad exponent vector {exp} for {self}")
        return Polynomial(self, {exp: coeff})

    def subring(self, names: Iterable[str]) -> "Ring":
        """Ring on a subset of the variables, kept in this ring's order."""
        wanted = set(names)
        for name in wanted:
            self.index(name)
        return Ring(v for v in self.variables if v in wanted)

    def term_string(self, exp: Exponent) -> str:
        parts = []
        for name, e in zip(self.variables, exp):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to Fractions.

    Terms are stored in DegRevLex-descending order so iteration and printing
    are deterministic.
    """

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Sequence[int], object] = ()):
        clean: Dict[Exponent, Fraction] = {}
        n = ring.n
        for exp, c in dict(terms).items():
            exp = tuple(exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp} has wrong length for {ring}")
            c = as_fraction(c)
            if c:
                clean[exp] = clean.get(exp, 0) + c
        self.ring = ring
        self.terms = _sorted_terms(clean)
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, terms: Dict[Exponent, Fraction]) -> "Polynomial":
        # trusted constructor: nonzero Fraction coefficients, correct lengths
        obj = cls.__new__(cls)
        obj.ring = ring
        obj.terms = _sorted_terms(terms)
        obj._hash = None
        return obj

    # -- basic queries -------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def support(self) -> Tuple[Exponent, ...]:
        return tuple(self.terms)

    def coeff(self, exp: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def constant_coeff(self) -> Fraction:
        return self.coeff(self.ring.zero_exponent())

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def indets(self) -> frozenset:
        """Variables dividing at least one support term."""
        used = set()
        for exp in self.terms:
            used.update(i for i, e in enumerate(exp) if e)
        return frozenset(self.ring.variables[i] for i in used)

    def homogeneous_component(self, degree: int) -> "Polynomial":
        return Polynomial._raw(
            self.ring, {e: c for e, c in self.terms.items() if sum(e) == degree}
        )

    # -- ordering dependent -------------------------------------------
    def leading_term(self, ordering) -> Exponent:
        if not self.terms:
            raise ZeroPolynomialError("leading term of the zero polynomial")
        return max(self.terms, key=ordering.key)

    def leading_coeff(self, ordering) -> Fraction:
        return self.terms[self.leading_term(ordering)]

    def monic(self, ordering) -> "Polynomial":
        return self.scale(1 / self.leading_coeff(ordering))

    # -- arithmetic ----------------------------------------------------
    def _check(self, other: "Polynomial") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Rational)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return Polynomial._raw(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "Polynomial":
        c = as_fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(self.ring, {e: v * c for e, v in self.terms.items()})

    def __truediv__(self, c):
        return self.scale(1 / as_fraction(c))

    def mul_term(self, exp: Exponent, c=1) -> "Polynomial":
        c = as_fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial._raw(
            self.ring,
            {tuple(a + b for a, b in zip(e, exp)): v * c for e, v in self.terms.items()},
        )

    # -- maps ----------------------------------------------------------
    def substitute(self, images: Mapping[str, "Polynomial"], target: Ring = None) -> "Polynomial":
        """Evaluate the ring homomorphism x_i -> images[x_i].

        Variables without an image map to the same-named variable of the
        target ring (identity by default).
        """
        target = target or _image_ring(images) or self.ring
        values = []
        for name in self.ring.variables:
            if name in images:
                img = images[name]
                if not isinstance(img, Polynomial):
                    img = target.constant(img)
                if img.ring != target:
                    raise RingMismatchError(f"image of {name} lives in {img.ring}, expected {target}")
                values.append(img)
            elif name in target:
                values.append(target.gen(name))
            else:
                raise RingMismatchError(f"no image given for {name}")
        powers = [dict() for _ in values]
        result = target.zero()
        for exp, c in self.terms.items():
            term = target.constant(c)
            for i, e in enumerate(exp):
                if e:
                    p = powers[i].get(e)
                    if p is None:
                        p = powers[i][e] = values[i] ** e
                    term = term * p
            result = result + term
        return result

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.ring.n:
            raise ValueError("point has wrong dimension")
        pt = [as_fraction(a) for a in point]
        total = Fraction(0)
        for exp, c in self.terms.items():
            v = c
            for a, e in zip(pt, exp):
                if e:
                    v *= a ** e
            total += v
        return total

    def derivative(self, name: str) -> "Polynomial":
        i = self.ring.index(name)
        out = {}
        for exp, c in self.terms.items():
            if exp[i]:
                e = list(exp)
                e[i] -= 1
                out[tuple(e)] = c * exp[i]
        return Polynomial._raw(self.ring, out)

    def to_ring(self, ring: Ring) -> "Polynomial":
        """Re-express in another ring by variable name.

        Fails if a variable actually used here is missing from ``ring``.
        """
        if ring == self.ring:
            return self
        pos = []
        for i, name in enumerate(self.ring.variables):
            pos.append(ring._index.get(name))
        out = {}
        for exp, c in self.terms.items():
            e = [0] * ring.n
            for i, k in enumerate(exp):
                if k:
                    j = pos[i]
                    if j is None:
                        raise RingMismatchError(
                            f"{self.ring.variables[i]} does not exist in {ring}"
                        )
                    e[j] = k
            out[tuple(e)] = c
        return Polynomial._raw(ring, out)

    # -- identity ------------------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Rational)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def __getstate__(self):
        return (self.ring, self.terms)

    def __setstate__(self, state):
        self.ring, self.terms = state
        self._hash = None

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r}, {self.ring!r})"


def _sorted_terms(terms: Dict[Exponent, Fraction]) -> Dict[Exponent, Fraction]:
    if len(terms) < 2:
        return dict(terms)
    return {e: terms[e] for e in sorted(terms, key=degrevlex_key, reverse=True)}


def _image_ring(images) -> Ring:
    for img in images.values():
        if isinstance(img, Polynomial):
            return img.ring
    return None


def format_coefficient(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(f: Polynomial) -> str:
    """Canonical text form, parseable by :func:`sepembed.parser.parse_polynomial`."""
    if not f.terms:
        return "0"
    out = []
    for k, (exp, c) in enumerate(f.terms.items()):
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        if any(exp):
            mono = f.ring.term_string(exp)
            body = mono if a == 1 else f"{format_coefficient(a)}*{mono}"
        else:
            body = format_coefficient(a)
        if k == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)
