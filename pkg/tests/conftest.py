from __future__ import annotations

import numpy as np
import pytest
from hypothesis import strategies as st

from diracverify.gamma import build_representation
from diracverify.numerics import Momentum
from diracverify.operators import standard_ops

MASSES = (0.5, 1.0, 2.0)

component = st.floats(-3, 3, allow_nan=False, allow_infinity=False)
momenta = st.builds(lambda m, a, b, c: Momentum(m, (a, b, c)), st.sampled_from(MASSES), component, component,
                    component)


@pytest.fixture(scope="session")
def rep():
    return build_representation()


@pytest.fixture(scope="session")
def ops():
    return standard_ops()


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def p():
    return Momentum(1.3, (0.4, -1.1, 0.7))


@pytest.fixture
def xs(rng):
    return rng.uniform(-5, 5, size=(20, 4))


def finite_difference(f, x, alpha, h=1e-3):
    """Central difference of f along x^alpha."""
    e = np.zeros(4)
    e[alpha] = h
    return (f(x + e) - f(x - e)) / (2 * h)


# Lines recorded by test_acceptance, echoed after the run.
ACCEPTANCE: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
