import threading
from collections.abc import Iterable

from src.engine.counts import LamanCount
from src.graph.canonical import CanonicalKey
from src.utils.errors import LamanError


class MemoCache:
    """Thread-safe map from canonical keys to Laman counts.

    Writes are idempotent: binding a key again with an equal value is a no-op,
    binding it to a different value raises.
    """

    def __init__(self):
        self._values: dict[CanonicalKey, LamanCount] = {}
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def get(self, key: CanonicalKey) -> LamanCount | None:
        with self._lock:
            value = self._values.get(key)
            if value is None:
                self.misses += 1
            else:
                self.hits += 1
            return value

    def put(self, key: CanonicalKey, value: LamanCount) -> None:
        with self._lock:
            current = self._values.setdefault(key, value)
        if current != value:
            raise LamanError(
                f"Cache key {key} already bound to {current}, refusing to rebind to {value}"
            )

    def update(self, items: Iterable[tuple[CanonicalKey, LamanCount]]) -> None:
        for key, value in items:
            self.put(key, value)

    def items(self) -> list[tuple[CanonicalKey, LamanCount]]:
        with self._lock:
            return list(self._values.items())

    def clear(self) -> None:
        with self._lock:
            self._values.clear()
            self.hits = 0
            self.misses = 0

    def __len__(self) -> int:
        with self._lock:
            return len(self._values)

    def __contains__(self, key: CanonicalKey) -> bool:
        with self._lock:
            return key in self._values
