import pytest
from hypothesis import settings

from ballean.core import iary, point_ideal
from ballean.hyper import hyperballean
from ballean.ideals import Ideal

settings.register_profile("default", derandomize=True, max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(autouse=True)
def _fresh_caches():
    yield
    point_ideal.cache_clear()
    iary.cache_clear()
    hyperballean.cache_clear()


@pytest.fixture
def p01():
    """P({0,1}) on four points."""
    return Ideal.principal(4, [0, 1])
