import sys
from pathlib import Path

import pytest

# Add src to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from crossint_lab.models.families import CrossPair, Family  # noqa: E402

SCHEMA_DIR = Path(__file__).parent.parent / "docs" / "schemas"


def pytest_configure(config):
    # Add custom markers for test organization
    config.addinivalue_line("markers", "unit: mark test as a unit test")
    config.addinivalue_line(
        "markers", "integration: mark test as an integration test"
    )
    config.addinivalue_line(
        "markers", "slow: long-running exact search, excluded by default"
    )


@pytest.fixture(autouse=True)
def crossint_env(monkeypatch):
    """Pin the CROSSINT_* settings so every test sees the defaults.

    Values from the developer's shell or a stray ``.env`` would otherwise
    change caps, worker counts and pruning thresholds mid-suite.
    """
    monkeypatch.setenv("CROSSINT_LOG_LEVEL", "WARNING")
    monkeypatch.setenv("CROSSINT_HARD_CAP", "8")
    monkeypatch.setenv("CROSSINT_DEFAULT_WORKERS", "1")
    monkeypatch.setenv("CROSSINT_DIMENSION_PRUNE_MIN_N", "7")
    monkeypatch.setenv("CROSSINT_INCUMBENT_SYNC_INTERVAL", "512")
    monkeypatch.setenv("CROSSINT_SELFTEST_ROUNDS", "20")
    monkeypatch.setenv("CROSSINT_NAIVE_ORACLE_MAX_N", "4")
    yield


@pytest.fixture
def acz_4_1():
    """ACZ pair for n=4, ℓ=1: A = {{1,2}}, B = sets meeting {1,2} once."""
    a = Family.from_sets(4, [{1, 2}])
    b = Family.from_sets(
        4,
        [{1}, {2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {1, 3, 4}, {2, 3, 4}],
    )
    return CrossPair.build(a, b, 1)


@pytest.fixture
def load_schema():
    """Return a loader for the JSON schemas shipped in docs/schemas."""
    import json

    def _load(name):
        path = SCHEMA_DIR / f"{name}.schema.json"
        return json.loads(path.read_text(encoding="utf-8"))

    return _load
