import pytest

from toricgb import reduced_groebner_basis
from toricgb.verify import random_instances

from _util import FIXTURES, pres


@pytest.fixture(scope="session")
def presentations():
    return {name: pres(fixture) for name, fixture in FIXTURES.items()}


@pytest.fixture(scope="session")
def results(presentations):
    return {name: reduced_groebner_basis(p) for name, p in presentations.items()}


@pytest.fixture(scope="session")
def random_results():
    return [reduced_groebner_basis(p) for p in random_instances(seed=20261014, count=60)]


@pytest.fixture(scope="session")
def criterion_log(request):
    log = request.config.stash.setdefault(_LOG, [])
    return log


_LOG = pytest.StashKey[list]()


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LOG, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
