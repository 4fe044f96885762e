import math

import pytest

from grsurf.meridian import Interval, closed_form
from grsurf.surface import SurfaceSpec


@pytest.fixture
def unit_I():
    """Type I, f=1, g=u, alpha=beta=1: the hand-computed reference surface."""
    return SurfaceSpec("I", 1.0, 1.0, closed_form("1", "u"))


@pytest.fixture
def unit_II():
    """Type II, f=1, g=u, alpha=1, beta=2 (valid for u > 1/2)."""
    return SurfaceSpec("II", 1.0, 2.0, closed_form("1", "u", Interval(0.5, math.inf, True)))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
