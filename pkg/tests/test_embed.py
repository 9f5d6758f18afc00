import json

import pytest

from helpers import example_ideal, problem
from sepembed import (
    Bounded,
    Certified,
    Ideal,
    Ring,
    certify_optimal,
    cotangent_dim,
    search_optimal_reembedding,
)

ALL = ["tangent_line", "double_line", "eliminate_x", "chain", "two_optimal", "partition", "five_vars", "hypersurface", "shifted"]
SMALL_FANS = ["tangent_line", "eliminate_x", "chain", "two_optimal", "partition", "hypersurface"]


def test_status_strings():
    assert str(Certified(2)) == "certified 2"
    assert str(Bounded(1, 2)) == "between 1 and 2"
    assert Bounded(1, 2).bounds() == (1, 2)


def test_certified_partition_example():
    report = search_optimal_reembedding(example_ideal("partition"))
    assert report.edim == Certified(1)
    assert report.best_z == ("y", "z")
    assert report.reembedding.image_gb.polynomials == (Ring("x")("x^5 - x^4 + 2*x^2"),)


def test_interval_when_cotangent_bound_is_not_reached():
    report = search_optimal_reembedding(example_ideal("two_optimal"))
    assert report.edim == Bounded(1, 2)
    assert not report.certified
    assert report.sepdim == 2


def test_no_separating_tuple():
    report = search_optimal_reembedding(example_ideal("hypersurface"))
    assert report.edim == Bounded(3, 4)
    assert report.reembedding is None and report.best_z == ()


def test_certify_optimal_rejects_wrong_size():
    ideal = example_ideal("partition")
    assert certify_optimal(ideal, None, ["y", "z"])
    assert not certify_optimal(ideal, None, ["y"])
    assert not certify_optimal(ideal, None, ["x", "y"])


def test_hint_is_probed_first():
    report = search_optimal_reembedding(example_ideal("five_vars"), z=["t", "y", "w"])
    assert report.probes[0] == (("t", "y", "w"), True)
    assert report.best_z == ("y", "w", "t")
    assert report.edim == Certified(2)


def test_report_serialises():
    d = search_optimal_reembedding(example_ideal("chain")).to_dict()
    assert json.loads(json.dumps(d)) == d
    assert d["edim"] == {"status": "certified", "lo": 1, "hi": 1}


@pytest.mark.parametrize("name", ALL)
def test_bound_chain(name):
    prob = problem(name)
    ideal = prob.ideal
    report = search_optimal_reembedding(ideal, prob.point)
    lo, hi = report.edim.bounds()
    assert cotangent_dim(ideal, prob.point) == report.cot_dim == lo
    assert lo <= hi == report.sepdim <= ideal.ring.n
    if report.reembedding is not None:
        assert report.reembedding.is_well_defined()
        assert report.reembedding.target_ring.n == hi


@pytest.mark.parametrize("name", SMALL_FANS)
def test_probing_agrees_with_fan(name):
    report = search_optimal_reembedding(example_ideal(name), use_fan=True)
    assert report.fan_cones is not None and report.fan_cones > 0


def test_fan_cap_only_cross_checks():
    report = search_optimal_reembedding(example_ideal("two_optimal"), use_fan=True, cap=3)
    assert report.fan_cones is None
    assert report.edim == Bounded(1, 2)


def test_zero_linear_part():
    R = Ring("x,y")
    report = search_optimal_reembedding(Ideal(R, ["x^2 - y^3"]))
    assert report.edim == Certified(2)
    assert report.reembedding is None
