import pytest
from hypothesis import settings

from antithickening import gen_cliques_matching, gen_named

from catalogs import FIXTURE_NAMES

# brute-force oracles are slow and uneven; a per-example deadline only adds flakiness
settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


@pytest.fixture(params=FIXTURE_NAMES)
def named(request):
    return request.param, gen_named(request.param)


@pytest.fixture
def cm3():
    return gen_cliques_matching(3)


@pytest.fixture
def t8():
    return gen_named("T8")


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
