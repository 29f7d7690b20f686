import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "bvtk", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.load_profile("bvtk")

from bvtk import families as F  # noqa: E402


@pytest.fixture(scope="session")
def gj5():
    return F.gj(5)


@pytest.fixture(scope="session")
def gj8():
    return F.gj(8)


@pytest.fixture(scope="session")
def small_families():
    """One small member of every constructor, for brute-force comparisons."""
    return {
        "gj": F.gj(4),
        "gj-mod": F.gj_modified(4),
        "dm2ww": F.dm2ww(5),
        "odometer": F.odometer("single", [2, 3, 2, 3]),
        "odometer-suo": F.odometer("suo", [2, 3, 2, 3]),
        "fig1": F.fig1_family(5),
        "kite": F.kite_nondet(5),
        "kite-det": F.kite_deterministic([3, 2, 2, 1], 5),
    }


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for n in sorted(results):
            terminalreporter.write_line(results[n])
