import time

import pytest

from homing.heights import build_height_table


class _TableCache:
    """Session-wide height tables, remembering how long each build took."""

    def __init__(self):
        self._tables = {}
        self.build_seconds = {}

    def get(self, n):
        if n not in self._tables:
            start = time.perf_counter()
            self._tables[n] = build_height_table(n, cap=max(n, 10))
            self.build_seconds[n] = time.perf_counter() - start
        return self._tables[n]


@pytest.fixture(scope="session")
def tables():
    return _TableCache()
