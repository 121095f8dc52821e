"""Shared pytest setup: the run ledger lives in a per-session temp directory."""

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from modalchar.core.config import settings
from modalchar.db import session as db_session_module


@pytest.fixture(scope="session", autouse=True)
def ledger_dir(tmp_path_factory):
    data_dir = tmp_path_factory.mktemp("ledger")
    saved = (settings.DATA_DIR, settings.DB_URL)
    settings.DATA_DIR = data_dir
    settings.DB_URL = f"sqlite:///{data_dir}/runs.db"
    db_session_module._engine = None
    yield data_dir
    if db_session_module._engine is not None:
        db_session_module._engine.dispose()
    db_session_module._engine = None
    settings.DATA_DIR, settings.DB_URL = saved


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: acceptance-scale property runs (deselect with -m 'not slow')")
