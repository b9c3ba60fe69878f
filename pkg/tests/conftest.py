from __future__ import annotations

import pytest

from wfc.generators import build_fixture


@pytest.fixture
def fx():
    """Fixture loader with a per-test cache."""
    cache = {}

    def load(name: str):
        if name not in cache:
            cache[name] = build_fixture(name)
        return cache[name]

    return load


@pytest.fixture
def w0(fx):
    return fx("W0")
