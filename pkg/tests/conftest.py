import random
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from lmp.constructions import random_walk_map
from lmp.core import IntervalSet, PAMap

FIXTURES = Path(__file__).parent / "fixtures"

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture
def fixtures():
    return FIXTURES


def grid_rationals(den=24):
    return st.integers(0, den).map(lambda k: Fraction(k, den))


@st.composite
def pa_maps(draw, max_points=7, den=24):
    """Arbitrary continuous PA self-maps of [0, 1] on a rational grid."""
    n = draw(st.integers(2, max_points))
    inner = draw(st.lists(st.integers(1, den - 1), min_size=n - 2, max_size=n - 2, unique=True))
    xs = [0] + sorted(inner) + [den]
    ys = draw(st.lists(st.integers(0, den), min_size=len(xs), max_size=len(xs)))
    return PAMap([(Fraction(x, den), Fraction(y, den)) for x, y in zip(xs, ys)])


@st.composite
def measure_preserving_maps(draw):
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    return random_walk_map(rng, cells=rng.randint(1, 5), steps=rng.randint(1, 10))


@st.composite
def interval_sets(draw, max_components=4, den=32):
    k = draw(st.integers(0, max_components))
    comps = []
    for _ in range(k):
        a = draw(st.integers(0, den))
        b = draw(st.integers(a, den))
        comps.append((Fraction(a, den), Fraction(b, den)))
    return IntervalSet(comps)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS):
            terminalreporter.write_line(line)
