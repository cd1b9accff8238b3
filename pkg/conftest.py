import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from qgestalt.music import load_fixtures  # noqa: E402


@pytest.fixture
def rng():
    """A seeded generator, fresh for every test."""
    return np.random.default_rng(20240601)


@pytest.fixture(scope='session')
def fixture_themes():
    return load_fixtures()


@pytest.fixture
def write_text(tmp_path):
    """Write `content` to `name` under a temporary directory and return the path."""
    def write(name, content):
        path = tmp_path / name
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(content, encoding='utf-8')
        return str(path)
    return write
