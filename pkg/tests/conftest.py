import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from idealtop.core import FiniteSpace, space_from_opens
from idealtop.ideals import ideal
from idealtop.search import enumerate_topologies, enumerate_topologies_by_family_filter

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", parent=settings.get_profile("default"), max_examples=500)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))

# independent open lists from the family filter, keyed by carrier size
FAMILIES = {n: enumerate_topologies_by_family_filter(n) for n in (1, 2, 3, 4)}


def family_spaces(max_n=4):
    for n in range(1, max_n + 1):
        for opens in FAMILIES[n]:
            yield n, list(opens), space_from_opens(n, opens)


@st.composite
def spaces(draw, min_n=1, max_n=4) -> FiniteSpace:
    n = draw(st.integers(min_n, max_n))
    return draw(st.sampled_from(list(enumerate_topologies(n))))


@st.composite
def space_ideal_set(draw, max_n=4):
    sp = draw(spaces(max_n=max_n))
    M = draw(st.integers(0, sp.full))
    a = draw(st.integers(0, sp.full))
    return sp, ideal(sp.n, M), a


@pytest.fixture
def sierpinski():
    from idealtop.core import sierpinski

    return sierpinski()


@pytest.fixture
def chain3():
    """Opens {}, {0}, {0,1}, X on three points."""
    return space_from_opens(3, [0b001, 0b011])


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, (ok, detail) in RESULTS.items():
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
