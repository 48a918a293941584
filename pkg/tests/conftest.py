import random

import pytest

from sl2hecke.field import make_field


@pytest.fixture(params=[5, 7, 13])
def spec(request):
    return make_field(request.param)


@pytest.fixture
def f5():
    return make_field(5)


@pytest.fixture
def rng():
    return random.Random(12345)
