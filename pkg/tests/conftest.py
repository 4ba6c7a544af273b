import functools

import pytest

from sscat import max_enumeration
from sscat.fixtures import fixture_categories
from sscat.sspace import classifying_diagram

CRITERIA = {
    1: "Segal failure of the spine",
    2: "nerve levels of [n] match monotone maps",
    3: "simplicial maps of nerves match functors",
    4: "category recovered from its nerve",
    5: "completeness fails on E(1) and holds on classifying diagrams",
    6: "homotopy equivalences agree by both routes",
    7: "composition independent of witnesses",
    8: "Grothendieck construction laws",
    9: "left fibration iff cofibered in sets",
    10: "adjoint via comma iff collage is Cartesian",
    11: "colimits pass the oracle",
    12: "strict pullback of the spine",
    13: "Kan lifting witnesses",
}

_outcomes = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion covered by this test")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    n = getattr(report, "criterion", None)
    if n is None:
        return
    _outcomes.setdefault(n, []).append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        rep.criterion = mark.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        results = _outcomes.get(n)
        if not results:
            status = "NOT RUN"
        elif all(r == "passed" for r in results):
            status = "PASS"
        else:
            status = "FAIL"
        terminalreporter.write_line(f"criterion {n:2d} {status:7s} {CRITERIA[n]}")


# I(2) needs about 6 * 10^5 enumerated simplices, past the default bound
LARGE_BOUND = 10**7


@functools.lru_cache(maxsize=None)
def classifying(name):
    with max_enumeration(LARGE_BOUND):
        return classifying_diagram(fixture_categories()[name])


@pytest.fixture(scope="session")
def fixtures():
    return fixture_categories()
