import random

import pytest

from helpers import pyramid


@pytest.fixture
def pyramid7():
    return pyramid(7)


@pytest.fixture
def plain7():
    return pyramid(7, "plain")


@pytest.fixture
def rng():
    return random.Random(20240917)
