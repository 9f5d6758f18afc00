"""Tails, separating polynomials and Z-separating re-embeddings."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple

from .exceptions import NoSeparatingTupleError, RingMismatchError, ZNotInLinearPartError
from .groebner import Ideal, MarkedGB, buchberger, normal_form
from .orderings import Elim, TermOrdering
from .poly import Polynomial, Ring


def tail(f: Polynomial, z: str) -> Polynomial:
    """The z-tail ``z - f/c`` where c is the coefficient of the term z in f."""
    c = f.coeff(f.ring.unit_exponent(z))
    if not c:
        raise ZNotInLinearPartError(f"{z} does not occur as a linear term of {f}")
    return f.ring.gen(z) - f.scale(1 / c)


def is_z_separating(f: Polynomial, z: str) -> bool:
    if not f.coeff(f.ring.unit_exponent(z)):
        return False
    return z not in tail(f, z).indets()


def is_coherently_separating(fs: Sequence[Polynomial], z: Sequence[str]) -> bool:
    if len(fs) != len(z):
        raise ValueError(f"{len(fs)} polynomials for {len(z)} variables")
    if len(set(z)) != len(z):
        raise ValueError("separating variables must be distinct")
    for i, (f, zi) in enumerate(zip(fs, z)):
        if f.is_zero() or not is_z_separating(f, zi):
            return False
        if any(zi in g.indets() for j, g in enumerate(fs) if j != i):
            return False
    return True


@dataclass(frozen=True)
class ZSplit:
    """Partition of the ring variables into separated Z and kept Y (ring order)."""

    ring: Ring
    z: Tuple[str, ...]
    y: Tuple[str, ...] = field(init=False)

    def __post_init__(self):
        z = tuple(self.z)
        if not z:
            raise ValueError("Z must be nonempty")
        if len(set(z)) != len(z):
            raise ValueError(f"repeated variables in Z={z}")
        for v in z:
            self.ring.index(v)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "y", tuple(v for v in self.ring.variables if v not in z))

    @property
    def subring(self) -> Ring:
        return Ring(self.y)


@dataclass
class SeparatingGB:
    """A Z-separating Gröbner basis: monic ``z_i - tail_i`` plus a reduced
    basis of the intersection with Q[Y] under the restricted ordering."""

    split: ZSplit
    ordering: TermOrdering
    sep_part: Tuple[Polynomial, ...]
    image_part: MarkedGB

    def __post_init__(self):
        self.sep_part = tuple(self.sep_part)
        if not is_coherently_separating(self.sep_part, self.split.z):
            raise ValueError("separating part is not coherently Z-separating")
        for zi, f in zip(self.split.z, self.sep_part):
            lt = self.split.ring.unit_exponent(zi)
            if f.coeff(lt) != 1 or f.leading_term(self.ordering) != lt:
                raise ValueError(f"{f} is not monic with leading term {zi}")
        if self.image_part.ring != self.split.subring:
            raise RingMismatchError("image part must live in Q[Y]")

    @property
    def tails(self) -> Dict[str, Polynomial]:
        sub = self.split.subring
        return {zi: tail(f, zi).to_ring(sub) for zi, f in zip(self.split.z, self.sep_part)}


def find_z_separating_gb(ideal: Ideal, z: Sequence[str], ordering: TermOrdering = None) -> Optional[SeparatingGB]:
    """Decide whether the ideal contains a coherently Z-separating tuple.

    The reduced Gröbner basis for an elimination ordering of Z (``Elim(Z)``
    unless ``ordering`` is given) has every z in Z as a marked leading term
    exactly when such a tuple exists; in that case the basis is returned as
    a :class:`SeparatingGB`, otherwise ``None``.
    """
    ring = ideal.ring
    split = ZSplit(ring, tuple(z))
    ordering = ordering or Elim(ring, split.z)
    gb = buchberger(ideal, ordering)
    return separating_gb_from_reduced(gb, split)


def separating_gb_from_reduced(gb: MarkedGB, split: ZSplit) -> Optional[SeparatingGB]:
    ring = gb.ring
    by_lt = {lt: g for lt, g in gb.elements}
    sep = []
    for zi in split.z:
        g = by_lt.get(ring.unit_exponent(zi))
        if g is None:
            return None
        sep.append(g)
    zset = set(split.z)
    sub = split.subring
    rest = []
    for lt, g in gb.elements:
        if sum(lt) == 1 and ring.variables[lt.index(1)] in zset:
            continue
        if g.indets() & zset:
            return None
        rest.append((lt, g))
    restricted = gb.ordering.restrict(sub)
    image = MarkedGB(
        restricted,
        [(tuple(lt[ring.index(v)] for v in sub.variables), g.to_ring(sub)) for lt, g in rest],
    )
    return SeparatingGB(split, gb.ordering, tuple(sep), image)


def reduced_from_separating(sgb: SeparatingGB) -> MarkedGB:
    """Replace each tail by its normal form modulo the image part."""
    ring = sgb.split.ring
    pairs = []
    for zi, t in sgb.tails.items():
        h = normal_form(t, sgb.image_part).to_ring(ring)
        pairs.append((ring.unit_exponent(zi), ring.gen(zi) - h))
    for lt, g in sgb.image_part.elements:
        pairs.append((g.to_ring(ring).leading_term(sgb.ordering), g.to_ring(ring)))
    return MarkedGB(sgb.ordering, pairs)


@dataclass
class Reembedding:
    """The isomorphism P/I -> Q[Y]/(I ∩ Q[Y]) given by z_i -> image_i."""

    split: ZSplit
    images: Dict[str, Polynomial]
    image_ideal: Ideal
    image_gb: MarkedGB
    source: Ideal

    @property
    def z(self) -> Tuple[str, ...]:
        return self.split.z

    @property
    def target_ring(self) -> Ring:
        return self.split.subring

    def forward(self, f: Polynomial) -> Polynomial:
        """Image of f under the substitution, not yet reduced."""
        if f.ring != self.split.ring:
            raise RingMismatchError(f"{f.ring} vs {self.split.ring}")
        return f.substitute(self.images, self.target_ring)

    def apply(self, f: Polynomial) -> Polynomial:
        """Canonical representative of the image class (normal form)."""
        return normal_form(self.forward(f), self.image_gb)

    def inverse(self, h: Polynomial) -> Polynomial:
        """Section y_i -> y_i back into the original ring."""
        if h.ring != self.target_ring:
            raise RingMismatchError(f"{h.ring} vs {self.target_ring}")
        return h.to_ring(self.split.ring)

    def is_well_defined(self) -> bool:
        return all(self.apply(g).is_zero() for g in self.source.generators)


def build_reembedding(ideal: Ideal, z: Sequence[str], ordering: TermOrdering = None,
                      sgb: SeparatingGB = None) -> Reembedding:
    """Construct the Z-separating re-embedding; images are the raw tails."""
    sgb = sgb or find_z_separating_gb(ideal, z, ordering)
    if sgb is None:
        raise NoSeparatingTupleError(f"no coherently separating tuple for Z={tuple(z)}")
    sub = sgb.split.subring
    image_polys = list(sgb.image_part.polynomials)
    image_ideal = Ideal(sub, image_polys or [sub.zero()])
    emb = Reembedding(sgb.split, sgb.tails, image_ideal, sgb.image_part, ideal)
    if not emb.is_well_defined():
        raise AssertionError("re-embedding does not kill the ideal's generators")
    return emb
