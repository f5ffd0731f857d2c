import pytest

from polylog_congruences.arith import PadicContext
from polylog_congruences.services.constants_cache import constants_cache

SMALL_PRIMES = [5, 7, 11, 13]


@pytest.fixture
def make_ctx():
    """Factory for p-adic contexts: ``make_ctx(p, k=1, g=2)``"""

    def _make(p: int, k: int = 1, g: int = 2) -> PadicContext:
        return PadicContext(p, k=k, g=g)

    return _make


@pytest.fixture
def fresh_constants_cache():
    constants_cache.clear()
    yield constants_cache
    constants_cache.clear()
