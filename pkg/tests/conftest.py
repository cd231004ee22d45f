import pytest

from helpers import boolean_arrangement, generic5_arrangement


@pytest.fixture
def boolean():
    return boolean_arrangement()


@pytest.fixture
def generic5():
    return generic5_arrangement()
