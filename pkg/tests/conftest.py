import numpy as np
import pytest

from uslev import sets

# four-point cloud used throughout the examples
F4 = np.array([[0.0, 3.0], [1.0, 1.0], [3.0, 0.0], [2.0, 2.0]])


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def orthant():
    return sets.Orthant(2, "nonneg")


@pytest.fixture
def nonpos():
    return sets.Orthant(2, "nonpos")


@pytest.fixture
def f4():
    return F4.copy()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    lines = [RESULTS[k] for k in sorted(RESULTS)]
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
