"""Acceptance gate: one group of tests per criterion, named test_criterion_<N>_*.

The terminal summary (see conftest.py) prints one PASS/FAIL line per criterion.
"""

import random
import time
import timeit

import pytest

from helpers import DATA, example_ideal, problem, sympy_groebner
from sepembed import (
    Bounded,
    Certified,
    DegRevLex,
    Elim,
    Ideal,
    Lex,
    Polynomial,
    Ring,
    UnitIdealError,
    WeightMatrix,
    bbs_ideal,
    buchberger,
    build_reembedding,
    certify_optimal,
    cotangent_dim,
    enumerate_gfan,
    find_z_separating_gb,
    flip,
    intersect_with_subring,
    is_coherently_separating,
    linear_part,
    linear_part_ideal,
    normal_form,
    search_optimal_reembedding,
    tangent_space,
)
from sepembed.bbs import OrderIdeal
from sepembed.gfan import Facet
from sepembed.linalg import rref


def best_time(fn, repeat=7, number=20):
    """Best per-call wall time in seconds over several batches."""
    return min(timeit.repeat(fn, repeat=repeat, number=number)) / number


def elapsed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def same_ideal(a, b):
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    return buchberger(a, DegRevLex(a.ring)) == buchberger(b, DegRevLex(b.ring))


# criterion 1 -------------------------------------------------------------

def test_criterion_1_linear_part_at_point():
    prob = problem("shifted")
    f = prob.generators[0]
    assert linear_part(f, prob.point) == prob.ring("x1 + 4*x2 - 9")
    assert best_time(lambda: linear_part(f, prob.point)) < 1e-3


# criterion 2 -------------------------------------------------------------

def test_criterion_2_cotangent_dimensions():
    line, double = example_ideal("tangent_line"), example_ideal("double_line")
    assert cotangent_dim(line) == 1
    assert tangent_space(line) == [(0, 1, 0)]
    assert cotangent_dim(double) == 2
    assert best_time(lambda: cotangent_dim(line)) < 1e-3
    assert best_time(lambda: tangent_space(line)) < 1e-3
    assert best_time(lambda: cotangent_dim(double)) < 1e-3


# criterion 3 -------------------------------------------------------------

def test_criterion_3_elimination_basis():
    ideal = example_ideal("eliminate_x")
    R = ideal.ring
    sub = R.subring(["y", "z"])

    def run():
        gb = buchberger(ideal, Elim(R, ["x"]))
        return gb, intersect_with_subring(ideal, ["y", "z"], gb)

    (gb, inter), secs = elapsed(run)
    expected = {R("x") - R("-1/2*y^3*z + 1/2*z^4"), R("y^4*z - y*z^4 + 2*z^2 - 2*y")}
    assert set(gb.polynomials) == expected
    for g in gb.polynomials:
        assert g.leading_coeff(gb.ordering) == 1
    assert inter.generators == (sub("y^4*z - y*z^4 + 2*z^2 - 2*y"),)
    # independent oracle: the x-free part of a lex basis spans the same ideal
    lex_part = [g.to_ring(sub) for g in sympy_groebner(ideal.generators, R, "lex") if "x" not in g.indets()]
    assert same_ideal(inter, Ideal(sub, lex_part))
    assert min(secs, best_time(run, repeat=3, number=3)) < 0.1


# criterion 4 -------------------------------------------------------------

def test_criterion_4_coherently_separating_tuples():
    ideal = example_ideal("chain")
    R = ideal.ring
    f1, f2 = ideal.generators
    g = R("z") - R("x^2 - x") ** 2
    assert not is_coherently_separating([f1, f2], ["y", "z"])
    assert is_coherently_separating([f1, g], ["y", "z"])
    sgb = find_z_separating_gb(ideal, ["y", "z"])
    assert sgb is not None
    emb = build_reembedding(ideal, ["y", "z"], sgb=sgb)
    assert emb.image_ideal.is_zero()
    assert best_time(lambda: find_z_separating_gb(ideal, ["y", "z"]), repeat=3, number=5) < 0.1


# criterion 5 -------------------------------------------------------------

def test_criterion_5_fan_sizes(fan_partition, fan_two_optimal, fan_five_vars):
    assert len(fan_two_optimal) == 26
    assert len(fan_partition) == 13
    assert len(fan_five_vars) == 462


def test_criterion_5_small_fans_take_seconds():
    for name, size in (("two_optimal", 26), ("partition", 13)):
        fan, secs = elapsed(lambda: enumerate_gfan(example_ideal(name)))
        assert len(fan) == size
        assert secs < 10


def test_criterion_5_large_fan_under_five_minutes():
    fan, secs = elapsed(lambda: enumerate_gfan(example_ideal("five_vars")))
    assert len(fan) == 462
    assert secs < 300


def test_criterion_5_class_count_three_variables(fan_partition):
    assert len(fan_partition.separating_classes()) == 4


def test_criterion_5_class_count_five_variables(fan_five_vars):
    # classes are the distinct nonempty leading-indeterminate sets
    assert len(fan_five_vars.separating_classes()) == 7


def test_criterion_5_maximal_classes(fan_two_optimal, fan_five_vars):
    assert set(fan_five_vars.maximal_classes()) == {frozenset("twy"), frozenset("wyz")}
    assert len(fan_two_optimal.maximal_classes()) == 2


# criterion 6 -------------------------------------------------------------

REPRESENTATIVES = {
    "G1": ["x + 1/3*y*z + 1/3*z^2 + y + z", "y^2 - 2/3*y*z + 1/3*z^2 - y",
           "y*z^2 + 10/3*y*z - 2/3*z^2", "z^3 + 5/3*y*z + 8/3*z^2"],
    "G2": ["z - x*y + x", "x^2 - y", "y^3 + 2*x*y - y^2 + 2*y", "x*y^2 - y^2 + 2*y"],
    "G3": ["y + 1/2*x*z + 1/2*z^2 + x + z", "x^2 + 1/2*x*z + 1/2*z^2 + x + z",
           "x*z^2 + 5/2*x*z - 1/2*z^2", "z^3 + 5/2*x*z + 7/2*z^2"],
    "G4": ["y - x^2", "z - x^3 + x", "x^5 - x^4 + 2*x^2"],
}
MARKINGS = {
    "G1": ["x", "y^2", "y*z^2", "z^3"],
    "G2": ["z", "x^2", "y^3", "x*y^2"],
    "G3": ["y", "x^2", "x*z^2", "z^3"],
    "G4": ["y", "z", "x^5"],
}


def _marked(ring, name):
    pairs = set()
    for lt_text, text in zip(MARKINGS[name], REPRESENTATIVES[name]):
        lt = next(iter(ring(lt_text).terms))
        pairs.add((lt, ring(text)))
    return pairs


def test_criterion_6_representatives(fan_partition):
    R = fan_partition.ideal.ring
    cones = [set(c.gb.elements) for c in fan_partition.cones]
    for name in REPRESENTATIVES:
        assert _marked(R, name) in cones, name
    g4 = _marked(R, "G4")
    owners = [i for i, c in enumerate(cones) if c == g4]
    assert len(owners) == 1


# criterion 7 -------------------------------------------------------------

def test_criterion_7_partition_example_certified():
    ideal = example_ideal("partition")
    report = search_optimal_reembedding(ideal)
    assert report.edim == Certified(1)
    assert set(report.best_z) == {"y", "z"}
    X = Ring("x")
    assert same_ideal(report.reembedding.image_ideal, Ideal(X, ["x^5 - x^4 + 2*x^2"]))
    assert certify_optimal(ideal, None, ["y", "z"])


def test_criterion_7_five_variable_example_certified():
    ideal = example_ideal("five_vars")
    z = ["t", "y", "w"]
    assert certify_optimal(ideal, None, z)
    emb = build_reembedding(ideal, z)
    XZ = Ring("x,z")
    assert emb.target_ring == XZ
    assert len(emb.image_ideal) == 1
    assert same_ideal(emb.image_ideal, Ideal(XZ, ["x^4 + 2*x^2*z^2 + z^4 + 2*x^2 - 2*z^2"]))
    report = search_optimal_reembedding(ideal, z=z)
    assert report.edim == Certified(2)
    assert set(report.best_z) == set(z)
    assert search_optimal_reembedding(ideal).edim == Certified(2)


def test_criterion_7_interval_never_certified():
    ideal = example_ideal("two_optimal")
    report = search_optimal_reembedding(ideal, use_fan=True)
    assert report.edim == Bounded(1, 2)
    assert not report.certified
    assert report.cot_dim == 1 and report.sepdim == 2


def test_criterion_7_no_separating_tuple():
    ideal = example_ideal("hypersurface")
    report = search_optimal_reembedding(ideal)
    assert report.reembedding is None
    assert report.edim.bounds()[1] == 4
    assert not report.certified


# criterion 8 -------------------------------------------------------------

def _reference(ring, prefix):
    out = []
    for line in (DATA / "bbs_quadrics.txt").read_text().splitlines():
        name, _, text = line.partition(": ")
        if name.startswith(prefix):
            out.append(ring(text))
    return out


def test_criterion_8_border_basis_scheme():
    start = time.perf_counter()
    pres = bbs_ideal(OrderIdeal(Ring("x,y,z"), ["1", "z", "y", "x"]))
    ideal = pres.ideal()
    C = ideal.ring
    assert C.n == 24
    lin = linear_part_ideal(ideal)
    Z = [f"c1{j}" for j in range(1, 7)]
    assert lin.dim == 6 and lin.pivot_variables() == Z

    sgb = find_z_separating_gb(ideal, Z)
    assert sgb is not None
    assert set(sgb.sep_part) == set(_reference(C, "f"))

    image = sgb.image_part
    sub = image.ring
    assert sub.n == 18
    quadrics = _reference(sub, "h")
    assert len(quadrics) == 15
    assert all(normal_form(h, image).is_zero() for h in quadrics)
    quadric_gb = buchberger(Ideal(sub, quadrics), image.ordering)
    assert all(normal_form(g, quadric_gb).is_zero() for g in image.polynomials)
    ours = [g for g in image.polynomials if g.total_degree() == 2]
    monos = sorted({e for f in quadrics + ours for e in f.terms})
    rank = len(rref([[f.coeff(m) for m in monos] for f in quadrics + ours])[0])
    assert rank == 15 == len(rref([[f.coeff(m) for m in monos] for f in quadrics])[0])

    assert certify_optimal(ideal, None, Z)
    assert C.n - len(Z) == 18
    assert time.perf_counter() - start < 300


# criterion 9 -------------------------------------------------------------

def _random_ideal(rng):
    n = rng.randint(1, 4)
    ring = Ring([f"x{i}" for i in range(n)])
    gens = []
    for _ in range(rng.randint(1, 3)):
        terms = {}
        for _ in range(rng.randint(1, 4)):
            exp = [0] * n
            for _ in range(rng.randint(0, 3)):
                exp[rng.randrange(n)] += 1
            terms[tuple(exp)] = rng.randint(-3, 3) or 1
        gens.append(Polynomial(ring, terms))
    return Ideal(ring, gens)


def test_criterion_9_groebner_idempotence_and_presentation():
    start = time.perf_counter()
    rng = random.Random(2024)
    checked = 0
    for _ in range(50):
        ideal = _random_ideal(rng)
        R = ideal.ring
        ordering = DegRevLex(R)
        try:
            gb = buchberger(ideal, ordering)
        except UnitIdealError:
            assert sympy_groebner(ideal.generators, R, "grevlex") == {R.one()}
            continue
        assert set(gb.polynomials) == sympy_groebner(ideal.generators, R, "grevlex")
        assert buchberger(Ideal(R, list(gb.polynomials) or [R.zero()]), ordering) == gb
        gens = list(ideal.generators)
        rng.shuffle(gens)
        extra = sum((rng.randint(-2, 2) * R.gen(rng.choice(R.variables)) * g for g in gens), R.zero())
        assert buchberger(Ideal(R, gens + [extra]), ordering) == gb
        checked += 1
    assert checked >= 25
    assert time.perf_counter() - start < 120


def test_criterion_9_fan_witnesses_and_coverage(fan_partition):
    start = time.perf_counter()
    ideal = fan_partition.ideal
    R = ideal.ring
    by_key = {c.gb.canonical_key(): c for c in fan_partition.cones}
    for cone in fan_partition.cones:
        assert buchberger(ideal, WeightMatrix(R, [cone.witness])) == cone.gb
    rng = random.Random(17)
    for _ in range(200):
        w = [rng.randint(1, 100) for _ in range(R.n)]
        cone = by_key.get(buchberger(ideal, WeightMatrix(R, [w])).canonical_key())
        assert cone is not None and cone.contains(w)
    assert time.perf_counter() - start < 120


@pytest.mark.parametrize("name", ["tangent_line", "double_line", "eliminate_x", "chain", "two_optimal", "partition",
                                  "five_vars", "hypersurface", "shifted"])
def test_criterion_9_bound_chain(name):
    start = time.perf_counter()
    prob = problem(name)
    report = search_optimal_reembedding(prob.ideal, prob.point)
    lo, hi = report.edim.bounds()
    assert report.cot_dim == cotangent_dim(prob.ideal, prob.point) == lo
    assert lo <= hi == report.sepdim <= prob.ring.n
    assert report.certified == (lo == hi)
    assert time.perf_counter() - start < 120


@pytest.mark.parametrize("name, z", [("eliminate_x", ["x"]), ("chain", ["y", "z"]), ("partition", ["y", "z"])])
def test_criterion_9_ordering_independence(name, z):
    start = time.perf_counter()
    ideal = example_ideal(name)
    R = ideal.ring
    ref = find_z_separating_gb(ideal, z)
    assert ref is not None
    zrow = [1 if v in z else 0 for v in R.variables]
    rng = random.Random(name)
    orderings = [Elim(R, z)] + [WeightMatrix(R, [zrow, [rng.randint(1, 9) for _ in range(R.n)]])
                                for _ in range(8)]
    if all(v in z for v in R.variables[: len(z)]):
        orderings.append(Lex(R))
    for ordering in orderings:
        sgb = find_z_separating_gb(ideal, z, ordering)
        assert sgb is not None
        sub = sgb.split.subring
        assert same_ideal(Ideal(sub, list(sgb.image_part.polynomials) or [sub.zero()]),
                          Ideal(sub, list(ref.image_part.polynomials) or [sub.zero()]))
    assert time.perf_counter() - start < 120


def test_criterion_9_flip_involution(fan_partition):
    start = time.perf_counter()
    known = {c.gb.canonical_key() for c in fan_partition.cones}
    flips = 0
    for cone in fan_partition.cones:
        for facet in cone.facets:
            if facet.on_orthant_boundary:
                continue
            other = flip(cone.gb, facet)
            assert other.canonical_key() in known
            back = Facet(tuple(-a for a in facet.normal), facet.interior_point, False)
            assert flip(other, back) == cone.gb
            flips += 1
    assert flips > 0
    assert time.perf_counter() - start < 120
