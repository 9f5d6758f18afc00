import pytest

from helpers import example_fan
from sepembed import Ring


@pytest.fixture
def xyz():
    return Ring("x,y,z")


@pytest.fixture(scope="session")
def fan_five_vars():
    return example_fan("five_vars")


@pytest.fixture(scope="session")
def fan_partition():
    return example_fan("partition")


@pytest.fixture(scope="session")
def fan_two_optimal():
    return example_fan("two_optimal")


CRITERIA = {
    1: "linear part at (1,2)",
    2: "cotangent dimensions",
    3: "elimination Gröbner basis",
    4: "coherently separating tuples",
    5: "Gröbner fan counts",
    6: "fan representatives G1..G4",
    7: "optimality certificates",
    8: "border basis scheme",
    9: "property suites",
}


def pytest_terminal_summary(terminalreporter):
    outcomes = {}
    for key in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(key, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            if rep.when != "call" and key == "passed":
                continue
            num = int(nodeid.split("test_criterion_")[1].split("_")[0])
            ok = key == "passed"
            outcomes[num] = outcomes.get(num, True) and ok
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA):
        if num in outcomes:
            status = "PASS" if outcomes[num] else "FAIL"
            terminalreporter.write_line(f"criterion {num}: {status}  {CRITERIA[num]}")
