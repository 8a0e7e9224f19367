from functools import lru_cache

import pytest

from app.core.models import Quartet
from app.core.pipeline import derive_quartet


@lru_cache(maxsize=None)
def _derived(n: int) -> Quartet:
    return derive_quartet(n)


@pytest.fixture(scope="session")
def derived():
    """Quartets of nP, derived once per test session."""
    return _derived
