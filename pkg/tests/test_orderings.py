import itertools
import random

import pytest
from sympy.polys.orderings import grevlex, lex

from sepembed import DegRevLex, Elim, Lex, Ring, WeightMatrix, compare_terms, make_ordering

R3 = Ring("x,y,z")
TERMS = list(itertools.product(range(3), repeat=3))


def _sign(a):
    return (a > 0) - (a < 0)


@pytest.mark.parametrize("ours, theirs", [(Lex, lex), (DegRevLex, grevlex)])
def test_orderings_match_sympy(ours, theirs):
    o = ours(R3)
    for a, b in itertools.product(TERMS, repeat=2):
        expected = _sign((theirs(a) > theirs(b)) - (theirs(a) < theirs(b)))
        assert compare_terms(o, a, b) == expected


def test_elim_puts_z_terms_above_z_free_terms():
    o = Elim(R3, ["y"])
    with_y = [t for t in TERMS if t[1]]
    without_y = [t for t in TERMS if not t[1]]
    for a in with_y:
        for b in without_y:
            assert compare_terms(o, a, b) == 1


def test_elim_orders_each_block_by_degrevlex():
    o = Elim(R3, ["x"])
    # same x-part, so the {y, z} block decides by degree first
    assert compare_terms(o, (1, 0, 3), (1, 2, 0)) == 1
    assert compare_terms(o, (1, 1, 1), (1, 2, 0)) == -1


def test_weight_matrix_refines_by_lex():
    o = WeightMatrix(R3, [[1, 1, 1]])
    assert compare_terms(o, (1, 0, 0), (0, 1, 0)) == 1
    assert compare_terms(o, (0, 0, 2), (1, 0, 0)) == 1


def test_weight_matrix_accepts_fractions():
    assert WeightMatrix(R3, [["1/2", 1, "3/2"]]).rows == ((1, 2, 3),)


@pytest.mark.parametrize("rows", [[[1, 1]], [], [[-1, 0, 0]]])
def test_weight_matrix_rejects_bad_rows(rows):
    with pytest.raises(ValueError):
        WeightMatrix(R3, rows)


def test_random_weights_compatible_with_multiplication():
    rng = random.Random(7)
    for _ in range(20):
        o = WeightMatrix(R3, [[rng.randint(1, 9) for _ in range(3)]])
        a, b, c = (tuple(rng.randint(0, 4) for _ in range(3)) for _ in range(3))
        ac = tuple(i + j for i, j in zip(a, c))
        bc = tuple(i + j for i, j in zip(b, c))
        assert compare_terms(o, a, b) == compare_terms(o, ac, bc)


@pytest.mark.parametrize(
    "spec, expected",
    [
        ("lex", Lex(R3)),
        ("degrevlex", DegRevLex(R3)),
        ("elim:z,x", Elim(R3, ["x", "z"])),
        ("weight:1,2,3", WeightMatrix(R3, [[1, 2, 3]])),
    ],
)
def test_make_ordering(spec, expected):
    assert make_ordering(spec, R3) == expected


def test_make_ordering_rejects_unknown():
    with pytest.raises(ValueError):
        make_ordering("bogus", R3)


def test_restrict_elim_drops_eliminated_block():
    sub = R3.subring(["y", "z"])
    assert Elim(R3, ["x"]).restrict(sub) == DegRevLex(sub)
    assert Elim(R3, ["x", "z"]).restrict(sub) == Elim(sub, ["z"])
