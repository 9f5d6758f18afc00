import pytest

from helpers import DATA
from sepembed import (
    Ideal,
    Ring,
    bbs_ideal,
    border,
    buchberger,
    certify_optimal,
    find_z_separating_gb,
    linear_part_ideal,
    normal_form,
)
from sepembed.bbs import OrderIdeal, c_name
from sepembed.linalg import rref

R = Ring("x,y,z")
Z = [f"c1{j}" for j in range(1, 7)]


def reference_polys(ring, prefix):
    """Named polynomials stored one per line as ``name: polynomial``."""
    out = {}
    for line in (DATA / "bbs_quadrics.txt").read_text().splitlines():
        name, _, text = line.partition(": ")
        if name.startswith(prefix):
            out[name] = ring(text)
    return out


@pytest.fixture(scope="module")
def presentation():
    return bbs_ideal(OrderIdeal(R, ["1", "z", "y", "x"]))


@pytest.fixture(scope="module")
def separating(presentation):
    return find_z_separating_gb(presentation.ideal(), Z)


def test_border_of_one_point():
    X = Ring("x")
    assert border(OrderIdeal(X, ["1"])) == [(1,)]


def test_border_of_two_points():
    XY = Ring("x,y")
    assert border(OrderIdeal(XY, ["1", "x"])) == [(0, 1), (1, 1), (2, 0)]


def test_border_of_four_points():
    got = [R.term_string(t) for t in border(OrderIdeal(R, ["1", "z", "y", "x"]))]
    assert got == ["z^2", "y*z", "x*z", "y^2", "x*y", "x^2"]


@pytest.mark.parametrize("terms", [["x"], ["1", "x^2"], ["1", "x", "x"]])
def test_order_ideal_validation(terms):
    with pytest.raises(ValueError):
        OrderIdeal(R, terms)


def test_c_names():
    assert c_name(1, 6) == "c16"
    assert c_name(12, 3) == "c12_3"


def test_shape(presentation):
    ideal = presentation.ideal()
    assert ideal.ring.n == 24
    origin = (0,) * 24
    for g in ideal.generators:
        assert g.evaluate(origin) == 0
        assert g.total_degree() <= 2


def test_linear_part(presentation):
    lin = linear_part_ideal(presentation.ideal())
    assert lin.dim == 6
    assert lin.pivot_variables() == Z


def test_separating_tuple(presentation, separating):
    assert separating is not None
    C = presentation.ideal().ring
    assert set(separating.sep_part) == set(reference_polys(C, "f").values())


def test_image_is_generated_by_the_reference_quadrics(separating):
    image = separating.image_part
    sub = image.ring
    quadrics = list(reference_polys(sub, "h").values())
    assert len(quadrics) == 15
    for h in quadrics:
        assert normal_form(h, image).is_zero()
    quadric_gb = buchberger(Ideal(sub, quadrics), image.ordering)
    for g in image.polynomials:
        assert normal_form(g, quadric_gb).is_zero()
    assert quadric_gb == image


def test_degree_two_span(separating):
    image = separating.image_part
    sub = image.ring
    quadrics = list(reference_polys(sub, "h").values())
    ours = [g for g in image.polynomials if g.total_degree() == 2]
    monos = sorted({e for f in quadrics + ours for e in f.terms})

    def rank(polys):
        return len(rref([[f.coeff(m) for m in monos] for f in polys])[0])

    assert rank(quadrics) == rank(ours) == rank(quadrics + ours) == 15


def test_certified_embedding_dimension(presentation):
    ideal = presentation.ideal()
    assert certify_optimal(ideal, None, Z)
    assert ideal.ring.n - len(Z) == 18
