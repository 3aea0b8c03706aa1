import random

import pytest

from fatpoints import example_scheme, example_scheme_pair
from fatpoints.verify import random_scheme


@pytest.fixture(scope="session")
def ex27():
    return example_scheme("ex-2.7")


@pytest.fixture(scope="session")
def ex28():
    return example_scheme("ex-2.8")


@pytest.fixture(scope="session")
def ex34():
    return example_scheme_pair("ex-3.4")


@pytest.fixture(scope="session")
def rem42():
    return example_scheme("rem-4.2")


def seeded_schemes(seed, count, **kwargs):
    rng = random.Random(seed)
    return [random_scheme(rng, **kwargs) for _ in range(count)]
