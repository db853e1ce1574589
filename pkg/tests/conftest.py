import math

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from lenstorsion.lens import LensSpace
from lenstorsion.reptheory import TorusElement

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def lens_spaces(draw, n_max=3, mu_max=12):
    n = draw(st.integers(1, n_max))
    mu = draw(st.integers(1, mu_max))
    units = [v for v in range(1, mu + 1) if math.gcd(v, mu) == 1]
    nu = draw(st.lists(st.sampled_from(units), min_size=n + 1, max_size=n + 1))
    return LensSpace(n, mu, tuple(nu))


@st.composite
def torus_elements(draw, n_max=4, mu_max=64):
    n = draw(st.integers(1, n_max))
    mu = draw(st.integers(1, mu_max))
    exps = draw(st.lists(st.integers(0, mu - 1), min_size=n + 1, max_size=n + 1))
    return TorusElement(mu, tuple(exps))


# acceptance lines collected by test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES
