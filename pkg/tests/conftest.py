from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from discdisp import from_pmf

settings.register_profile("default", deadline=None, max_examples=200,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def exact_dists(draw, min_atoms=2, max_atoms=6, denom=24, grid=20):
    """Exact distributions on a half-integer grid with rational masses."""
    k = draw(st.integers(min_atoms, max_atoms))
    cuts = sorted(draw(st.lists(st.integers(1, denom - 1), min_size=k - 1, max_size=k - 1, unique=True)))
    weights = [b - a for a, b in zip([0] + cuts, cuts + [denom])]
    points = sorted(draw(st.lists(st.integers(-grid, grid), min_size=k, max_size=k, unique=True)))
    return from_pmf([(Fraction(x, 2), Fraction(w, denom)) for x, w in zip(points, weights)])


@pytest.fixture
def iqr_pair():
    f = from_pmf([(1, Fraction(3, 10)), (2, Fraction(1, 5)), (3, Fraction(1, 5)), (4, Fraction(3, 10))])
    from discdisp import uniform_range
    return f, uniform_range(5)


ACCEPTANCE_LINES = []


@pytest.fixture
def report():
    """Record one PASS/FAIL line for an acceptance criterion."""
    def _report(number, ok, detail):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok
    return _report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
