from itertools import combinations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from safecolor import Graph, gen_random_min_deg3

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    edges = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return Graph.from_edges(n, edges)


@st.composite
def min_deg3_graphs(draw, min_n=4, max_n=10):
    n = draw(st.integers(min_n, max_n))
    p = draw(st.sampled_from([0.05, 0.15, 0.3, 0.5, 0.8]))
    seed = draw(st.integers(0, 2**32 - 1))
    return gen_random_min_deg3(n, p, seed)


@st.composite
def colorings(draw, n, k=3):
    return tuple(draw(st.lists(st.integers(1, k), min_size=n, max_size=n)))


# ------------------------------------------------------------ acceptance log


def pytest_configure(config):
    config._acceptance = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the terminal summary prints them all."""

    def record(number, title, passed, detail=""):
        request.config._acceptance.append((number, title, passed, detail))
        return passed

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = sorted(config._acceptance)
    if not rows:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in rows:
        tag = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{tag}] {number}. {title}" + (f" -- {detail}" if detail else ""))
