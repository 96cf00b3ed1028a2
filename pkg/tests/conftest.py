import random

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


def pytest_addoption(parser):
    parser.addoption(
        "--seed",
        type=int,
        default=20230518,
        help="seed for the random-sampling tests",
    )


@pytest.fixture
def rng(request):
    return random.Random(request.config.getoption("--seed"))


@pytest.fixture(scope="session")
def session_rng(request):
    return random.Random(request.config.getoption("--seed"))


@pytest.fixture(scope="session")
def h2_sweep_100k():
    """(p, h, label) for every prime p = 1 mod 8 below 10^5; shared by the
    exhaustive acceptance checks."""
    from twotorsion.classgroup import class_number
    from twotorsion.primes import classify, primes_below

    out = []
    for p in primes_below(100000):
        if p % 8 == 1:
            out.append((p, class_number(-4 * p), classify(p)))
    return out
