import pytest

from gmacheck import cache


@pytest.fixture(autouse=True)
def _isolated_cache():
    cache.configure(None)
    cache.clear_memory()
    yield
    cache.configure(None)
    cache.clear_memory()
