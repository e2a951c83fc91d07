import pytest

from hermlift import goodness
from hermlift.field import GF2m


@pytest.fixture(scope="session")
def gf():
    cache = {}

    def get(k):
        if k not in cache:
            cache[k] = GF2m(k)
        return cache[k]

    return get


@pytest.fixture(scope="session")
def exact_reports(gf):
    """Exact classification of every footprint monomial, cached per k."""
    cache = {}

    def get(k):
        if k not in cache:
            cache[k] = goodness.classify(gf(k), "exact")
        return cache[k]

    return get
