# tests/conftest.py
import random

import pytest

from quotfib.algebra import prime_field, rationals
from quotfib.core import DEFAULT_SEED


@pytest.fixture
def qq():
    return rationals()


@pytest.fixture
def gf2():
    return prime_field(2)


@pytest.fixture
def gf3():
    return prime_field(3)


@pytest.fixture
def gf5():
    return prime_field(5)


@pytest.fixture
def rng():
    """Seeded generator so randomized properties are reproducible."""
    return random.Random(DEFAULT_SEED)
