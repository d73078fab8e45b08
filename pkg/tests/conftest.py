import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from arspace.interval import parse_interval
from arspace.oracle import random_interval, random_quiver
from arspace.quiver import ExtReal, Parity, QuiverSpec, validate_quiver

settings.register_profile("default", max_examples=150, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def Q(points, parity="even"):
    return validate_quiver(QuiverSpec.of(points, parity))


@pytest.fixture
def q1():
    return Q([0])


def I(text):
    return parse_interval(text)


quivers = st.builds(
    lambda pts, parity: QuiverSpec(tuple(Fraction(p) for p in sorted(pts)), parity),
    st.sets(st.integers(-4, 4), min_size=1, max_size=4),
    st.sampled_from(list(Parity)),
)

seeds = st.integers(0, 2**32 - 1)


@st.composite
def quiver_and_intervals(draw, count=2, max_ss=4):
    """A random quiver with ``count`` intervals drawn from the oracle's lattice."""
    rng = random.Random(draw(seeds))
    q = random_quiver(rng, max_ss)
    return q, [random_interval(rng, q) for _ in range(count)]


def finite_points(q, lo=-6, hi=6):
    """Strategy for finite rationals on a quarter lattice around the quiver."""
    return st.integers(4 * lo, 4 * hi).map(lambda n: ExtReal(0, Fraction(n, 4)))


ACCEPTANCE_LINES = []


def record_acceptance(line):
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
