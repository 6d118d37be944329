import numpy as np
import pytest

from mim.distributions import make_distribution


def random_distribution(rng, n_min=2, n_max=10, floor=1e-6):
    n = int(rng.integers(n_min, n_max + 1))
    p = rng.dirichlet(np.ones(n)) + floor
    return make_distribution(p, normalize=True)


@pytest.fixture
def rng():
    return np.random.default_rng(20170815)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
