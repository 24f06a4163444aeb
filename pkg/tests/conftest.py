import pytest

from helpers import make_a1


@pytest.fixture
def a1():
    return make_a1()
