import logging
import threading
from collections import OrderedDict
from typing import Any, Callable, Hashable

from polylog_congruences.settings import settings

logger = logging.getLogger(__name__)


class ConstantsCache:
    """Thread-safe LRU cache for per-prime constant tables"""

    def __init__(self, max_size: int = 128):
        self.max_size = max_size
        self.cache: OrderedDict[Hashable, Any] = OrderedDict()
        self.hits = self.misses = 0
        self._lock = threading.Lock()

    def get(self, key: Hashable) -> Any | None:
        """Get a table from cache, marking it as recently used (thread-safe)"""
        with self._lock:
            if key not in self.cache:
                self.misses += 1
                return None
            self.cache.move_to_end(key)
            self.hits += 1
            return self.cache[key]

    def put(self, key: Hashable, value: Any) -> None:
        """Add a table with LRU eviction (thread-safe)"""
        with self._lock:
            if len(self.cache) >= self.max_size and key not in self.cache:
                oldest = next(iter(self.cache))
                del self.cache[oldest]
                logger.debug(
                    "Evicted oldest constants from cache (LRU)",
                    extra={
                        "evicted_key": str(oldest),
                        "cache_size": len(self.cache),
                        "max_size": self.max_size,
                    },
                )
            self.cache[key] = value
            self.cache.move_to_end(key)
            logger.debug(
                "Cached constants",
                extra={"key": str(key), "cache_size": len(self.cache)},
            )

    def get_or_build(self, key: Hashable, builder: Callable[[], Any]) -> Any:
        """Return the cached table, building and storing it on a miss.

        Two threads missing the same key may both build; the tables are
        deterministic so the later put simply replaces an equal value.
        """
        if (value := self.get(key)) is not None:
            return value
        value = builder()
        self.put(key, value)
        return value

    def clear(self) -> None:
        """Clear all cached tables (thread-safe)"""
        with self._lock:
            cached_count = len(self.cache)
            self.cache.clear()
            self.hits = self.misses = 0
            logger.info("Constants cache cleared", extra={"cleared_count": cached_count})

    def stats(self) -> dict:
        """Get cache statistics (thread-safe)"""
        with self._lock:
            total = self.hits + self.misses
            return {
                "size": len(self.cache),
                "max_size": self.max_size,
                "hits": self.hits,
                "misses": self.misses,
                "hit_rate_percent": round((self.hits / total * 100) if total else 0, 2),
                "cached_keys": [str(k) for k in self.cache],
            }


constants_cache = ConstantsCache(max_size=settings.constants_cache_size)
