import os
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, str(Path(__file__).parent))

import reference_data as P  # noqa: E402

from helpers import const, poly, system, triple  # noqa: E402

from convring.code import make_code  # noqa: E402
from convring.ring import make_ring  # noqa: E402

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=300, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def Z6():
    return make_ring(6)


@pytest.fixture(scope="session")
def F2():
    return make_ring(2)


@pytest.fixture(scope="session")
def F3():
    return make_ring(3)


@pytest.fixture(scope="session")
def G6(Z6):
    return poly(Z6, P.G)


@pytest.fixture(scope="session")
def G1(F2):
    return poly(F2, P.G1)


@pytest.fixture(scope="session")
def G2(F3):
    return poly(F3, P.G2)


@pytest.fixture(scope="session")
def code6(Z6, G6):
    return make_code(Z6, G6)


@pytest.fixture(scope="session")
def code1(F2, G1):
    return make_code(F2, G1)


@pytest.fixture(scope="session")
def code2(F3, G2):
    return make_code(F3, G2)


@pytest.fixture(scope="session")
def rep1(F2):
    return triple(F2, P.K1, P.L1, P.M1)


@pytest.fixture(scope="session")
def rep2(F3):
    return triple(F3, P.K2, P.L2, P.M2)


@pytest.fixture(scope="session")
def rep6(Z6):
    return triple(Z6, P.K6, P.L6, P.M6)


@pytest.fixture(scope="session")
def sys1(F2):
    return system(F2, P.A1, P.B1, P.C1, P.D1)


@pytest.fixture(scope="session")
def sys2(F3):
    return system(F3, P.A2, P.B2, P.C2, P.D2)


@pytest.fixture(scope="session")
def sys6(Z6):
    return system(Z6, P.A, P.B, P.C, P.D)
