import pytest

from tensorcut.graph6 import emit_graph6
from tensorcut.mincut import enumerate_min_cuts


@pytest.fixture(scope="session")
def enum_cache():
    """Session-wide cache of exhaustive minimum-cut enumerations by graph6 key."""
    cache = {}

    def cached(product, budget):
        key = (emit_graph6(product), budget)
        if key not in cache:
            cache[key] = enumerate_min_cuts(product, budget)
        return cache[key]

    return cached
