import sys
from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from galdist.cuspidal_lines import CuspidalDatum, Duality, Registry, default_registry
from galdist.segments import Segment
from galdist.suite import suite_registry

settings.register_profile("ci", max_examples=60, deadline=None)
settings.load_profile("ci")


@pytest.fixture
def reg():
    return default_registry()


@pytest.fixture
def sreg():
    return suite_registry()


def registry_with(duality, l=1, degree=1):
    return Registry([CuspidalDatum("r", degree, l, duality)])


halves = st.integers(-8, 8).map(lambda n: Fraction(n, 2))


@st.composite
def segments(draw, rhos=("rho", "rhoe", "rho3", "rho1", "rho2"), max_len=4):
    rho = draw(st.sampled_from(rhos))
    a = draw(halves)
    n = draw(st.integers(0, max_len - 1))
    eta = draw(st.integers(0, 1))
    return Segment(rho, a, a + n, eta)


@st.composite
def same_line_pairs(draw, max_len=4):
    d = draw(segments(max_len=max_len))
    e = draw(st.integers(-8, 8))
    n = draw(st.integers(0, max_len - 1))
    return d, Segment(d.rho, d.a + e, d.a + e + n, d.eta_pow)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
