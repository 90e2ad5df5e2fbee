import pytest

from skewbrace.enumeration import enumerate_all
from skewbrace.families import (
    almost_trivial_brace,
    odd_p_cyclic_brace,
    odd_p_nonabelian_brace,
    trivial_brace,
    two_power_brace,
)
from skewbrace.groups import catalog_group

_ENUM_CACHE: dict = {}


@pytest.fixture(scope="session")
def corpus():
    """Factory returning cached iso-class representatives for one order."""

    def get(order: int):
        if order not in _ENUM_CACHE:
            _ENUM_CACHE[order] = list(enumerate_all(order).classes)
        return _ENUM_CACHE[order]

    return get


@pytest.fixture(scope="session")
def b4():
    return two_power_brace(2)


@pytest.fixture(scope="session")
def b8():
    return two_power_brace(3)


@pytest.fixture(scope="session")
def b9():
    return odd_p_cyclic_brace(3, 2)


@pytest.fixture(scope="session")
def b27_cyclic():
    return odd_p_cyclic_brace(3, 3)


@pytest.fixture(scope="session")
def b27_nonabelian():
    return odd_p_nonabelian_brace(3, 2)


@pytest.fixture(scope="session")
def s3_group():
    return catalog_group(6, 1)


@pytest.fixture(scope="session")
def trivial_s3(s3_group):
    return trivial_brace(s3_group)


@pytest.fixture(scope="session")
def almost_trivial_s3(s3_group):
    return almost_trivial_brace(s3_group)
