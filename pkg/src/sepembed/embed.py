"""Embedding-dimension bounds and the search for an optimal separating re-embedding."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional, Sequence, Tuple, Union

from .cotangent import LinearSpace, as_point, linear_part_ideal
from .exceptions import CapExceededError
from .gfan import enumerate_gfan
from .groebner import Ideal
from .separating import Reembedding, build_reembedding, find_z_separating_gb


@dataclass(frozen=True)
class Certified:
    value: int

    def bounds(self) -> Tuple[int, int]:
        return self.value, self.value

    def __str__(self):
        return f"certified {self.value}"


@dataclass(frozen=True)
class Bounded:
    lo: int
    hi: int

    def bounds(self) -> Tuple[int, int]:
        return self.lo, self.hi

    def __str__(self):
        return f"between {self.lo} and {self.hi}"


EdimStatus = Union[Certified, Bounded]


@dataclass
class EmbeddingReport:
    n: int
    lin: LinearSpace
    best_z: Tuple[str, ...]
    sepdim: Union[int, Tuple[int, int]]
    edim: EdimStatus
    reembedding: Optional[Reembedding] = None
    probes: List[Tuple[Tuple[str, ...], bool]] = field(default_factory=list)
    fan_cones: Optional[int] = None

    @property
    def lin_dim(self) -> int:
        return self.lin.dim

    @property
    def cot_dim(self) -> int:
        return self.n - self.lin.dim

    @property
    def certified(self) -> bool:
        return isinstance(self.edim, Certified)

    def to_dict(self) -> dict:
        from .io import polynomial_to_json

        emb = None
        if self.reembedding is not None:
            r = self.reembedding
            emb = {
                "z": list(r.z),
                "target_ring": list(r.target_ring.variables),
                "images": {z: polynomial_to_json(r.images[z]) for z in r.z},
                "image_ideal": [polynomial_to_json(g) for g in r.image_gb.polynomials],
            }
        lo, hi = self.edim.bounds()
        return {
            "n": self.n,
            "lin_dim": self.lin_dim,
            "cot_dim": self.cot_dim,
            "lin_basis": [polynomial_to_json(b) for b in self.lin.basis],
            "best_z": list(self.best_z),
            "sepdim": self.sepdim if isinstance(self.sepdim, int) else list(self.sepdim),
            "edim": {"status": "certified" if self.certified else "bounded", "lo": lo, "hi": hi},
            "fan_cones": self.fan_cones,
            "probes": [{"z": list(z), "found": ok} for z, ok in self.probes],
            "reembedding": emb,
        }


def certify_optimal(ideal: Ideal, point, z: Sequence[str]) -> bool:
    """True when Z has as many variables as the linear part has dimension
    and the ideal contains a coherently Z-separating tuple. Then the
    Z-separating re-embedding realises the embedding dimension n - #Z."""
    lin = linear_part_ideal(ideal, point)
    z = tuple(z)
    if len(z) != lin.dim:
        return False
    if not z:
        return True
    return find_z_separating_gb(ideal, z) is not None


def _ordered(ring, names) -> Tuple[str, ...]:
    names = set(names)
    return tuple(v for v in ring.variables if v in names)


def search_optimal_reembedding(ideal: Ideal, point=None, use_fan: bool = False,
                               z: Sequence[str] = None, cap: int = 10_000) -> EmbeddingReport:
    """Probe variable sets in decreasing size for a separating re-embedding.

    Only variables occurring in the echelon basis of the linear part can be
    separated, and no more than its dimension of them at once. A hit at that
    full size certifies the embedding dimension; otherwise the report brackets
    it between the cotangent dimension and the separating dimension found.

    ``z`` is probed first when given. With ``use_fan`` the Gröbner fan is
    enumerated as an independent cross-check of the separating dimension.
    """
    ring = ideal.ring
    n = ring.n
    pt = as_point(point, ring)
    lin = linear_part_ideal(ideal, pt)
    candidates = lin.support_variables()
    probes: List[Tuple[Tuple[str, ...], bool]] = []

    order: List[Tuple[str, ...]] = []
    if z:
        hint = tuple(z)
        for v in hint:
            ring.index(v)
        order.append(hint)
    for size in range(lin.dim, 0, -1):
        order.extend(combinations(candidates, size))

    found = None
    best: Tuple[str, ...] = ()
    for cand in order:
        if found is not None and len(cand) <= len(best):
            break
        sgb = find_z_separating_gb(ideal, cand)
        probes.append((tuple(cand), sgb is not None))
        if sgb is not None and len(cand) > len(best):
            best, found = tuple(cand), sgb
            if len(best) == lin.dim:
                break

    reembedding = build_reembedding(ideal, best, sgb=found) if found is not None else None
    sepdim: Union[int, Tuple[int, int]] = n - len(best)

    fan_cones = None
    if use_fan:
        try:
            fan = enumerate_gfan(ideal, cap=cap)
        except CapExceededError as exc:
            partial = exc.partial
            fan_cones = None
            if partial is not None and n - partial.max_li < sepdim:
                raise AssertionError("fan found a larger separating set than probing")
        else:
            fan_cones = len(fan)
            if n - fan.max_li != sepdim:
                raise AssertionError(
                    f"fan sepdim {n - fan.max_li} disagrees with probing {sepdim}"
                )

    if len(best) == lin.dim:
        edim: EdimStatus = Certified(n - lin.dim)
    else:
        edim = Bounded(n - lin.dim, n - len(best))
    return EmbeddingReport(n, lin, _ordered(ring, best) if best else (), sepdim, edim,
                           reembedding, probes, fan_cones)
