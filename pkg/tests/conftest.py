import os
import random

import hypothesis
import pytest

from algebra.field import FieldSpec

hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.register_profile("thorough", max_examples=200, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "fast"))


@pytest.fixture
def qq():
    return FieldSpec.rationals()


@pytest.fixture
def f2():
    return FieldSpec.prime(2)


@pytest.fixture
def f3():
    return FieldSpec.prime(3)


@pytest.fixture
def f5():
    return FieldSpec.prime(5)


@pytest.fixture
def f7():
    return FieldSpec.prime(7)


@pytest.fixture
def rng():
    return random.Random(0)
