"""Shared pytest fixtures.

MINORFORGE_TEST_SCALE (default 0.2) scales the seeded sample sizes; set it
to 1 to run the full acceptance counts.
"""

import random
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.synthesis.fixtures import build_fixture  # noqa: E402
from tests.strategies import TEST_SCALE  # noqa: E402

settings.register_profile(
    "minorforge",
    max_examples=max(10, int(100 * TEST_SCALE)),
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
    derandomize=True,
)
settings.load_profile("minorforge")


@pytest.fixture
def rng():
    return random.Random(0)


@pytest.fixture(scope="session")
def crossed_grid():
    return build_fixture("two-crosses-grid")


@pytest.fixture(scope="session")
def fixture_named():
    cache = {}

    def get(name: str):
        if name not in cache:
            cache[name] = build_fixture(name)
        return cache[name]

    return get


@pytest.fixture
def audit_file(tmp_path, monkeypatch):
    from src.utils import config

    path = tmp_path / "audit_trail.json"
    monkeypatch.setattr(config, "AUDIT_FILE", str(path))
    monkeypatch.setattr(config, "AUDIT_ENABLED", True)
    return path
