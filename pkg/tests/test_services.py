from polylog_congruences.services.constants_cache import ConstantsCache


def test_lru_eviction():
    cache = ConstantsCache(max_size=2)
    cache.put("a", 1)
    cache.put("b", 2)
    assert cache.get("a") == 1
    cache.put("c", 3)
    # "b" was least recently used
    assert cache.get("b") is None
    assert cache.get("a") == 1
    assert cache.get("c") == 3


def test_get_or_build_builds_once():
    cache = ConstantsCache()
    calls = []

    def build():
        calls.append(1)
        return {"p": 7}

    first = cache.get_or_build(7, build)
    second = cache.get_or_build(7, build)
    assert first is second
    assert len(calls) == 1


def test_stats_and_clear():
    cache = ConstantsCache(max_size=4)
    cache.get("missing")
    cache.put(11, "table")
    cache.get(11)
    stats = cache.stats()
    assert stats["hits"] == 1
    assert stats["misses"] == 1
    assert stats["hit_rate_percent"] == 50.0
    assert stats["cached_keys"] == ["11"]
    cache.clear()
    assert cache.stats()["size"] == 0
    assert cache.stats()["hits"] == 0
