import os
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from rankedtutte import BiPoly, random_ranked_set

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("ci", max_examples=300, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def polys(draw, max_deg=5, lo=-20, hi=20):
    dx = draw(st.integers(0, max_deg))
    dy = draw(st.integers(0, max_deg))
    grid = [[draw(st.integers(lo, hi)) for _ in range(dy + 1)] for _ in range(dx + 1)]
    return BiPoly(grid)


@st.composite
def ranked_sets(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_ranked_set(n, seed)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(results):
        terminalreporter.write_line(mod.line(num))
    npass = sum(1 for ok, _, _ in results.values() if ok)
    terminalreporter.write_line(f"{npass}/{len(results)} criteria pass")
