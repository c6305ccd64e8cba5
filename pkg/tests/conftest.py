"""Shared fixtures: the expensive objects are built once per session."""

import pytest

from handlebody import (Presentation, coset_enumerate, generate_c0,
                        heisenberg, semidirect_pq)

# One line per acceptance criterion, echoed in the terminal summary so the
# scoreboard is visible even for passing tests (stdout is captured).
ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def scoreboard():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance scoreboard")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

# Four-generator, twelve-relator presentation of the order-243 group used
# by the counting walkthrough (configs/order243_presented.cfg keeps the
# same relators in config form).
ORDER243_GENS = ("alpha", "beta", "gamma", "delta")
ORDER243_RELATORS = (
    "alpha^3", "beta^3", "gamma^3", "delta^3",
    "[alpha,beta]^3",
    "[alpha,delta]", "[gamma,delta]",
    "[[alpha,beta],alpha]", "[[alpha,beta],beta]",
    "gamma^-1 alpha gamma beta^-1 alpha^-1 beta",
    "gamma^-1 beta gamma alpha^-1 beta^-1 alpha",
    "delta^-1 beta delta alpha^-1 beta^-1 alpha",
)


@pytest.fixture(scope="session")
def orbit9():
    """The full default-depth orbit set (the expensive shared object)."""
    return generate_c0(depth=9)


@pytest.fixture(scope="session")
def orbit3():
    return generate_c0(depth=3)


@pytest.fixture(scope="session")
def group55():
    return semidirect_pq(11, 5, 3)


@pytest.fixture(scope="session")
def heis3():
    return heisenberg(3)


@pytest.fixture(scope="session")
def order243():
    pres = Presentation(ORDER243_GENS, ORDER243_RELATORS)
    return coset_enumerate(pres, coset_cap=50000)
