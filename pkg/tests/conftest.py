import pytest

from spexcess import fixtures as fx
from spexcess.pipeline import analyze_graph, run_all_checks

# every bundled fixture plus a few extras the tests lean on
EXTRA = {
    "k13": lambda: fx.star(3),
    "p4": lambda: fx.path(4),
    "p5": lambda: fx.path(5),
}

ALL_NAMES = sorted(fx.BUNDLED) + sorted(EXTRA)

# distance-regular fixtures used by the equality-side tests
DRG_NAMES = ["petersen", "c4", "c5", "c6", "c7", "c8", "k2", "k3", "k4", "k5"]


def make_graph(name):
    if name in fx.BUNDLED:
        return fx.BUNDLED[name]()
    return EXTRA[name]()


@pytest.fixture(scope="session")
def analyses():
    """Lazily built, session-cached GraphAnalysis per fixture name."""
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = analyze_graph(make_graph(name))
        return cache[name]

    return get


@pytest.fixture(scope="session")
def checks(analyses):
    """Session-cached run_all_checks output per fixture name."""
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = run_all_checks(analyses(name))
        return cache[name]

    return get
