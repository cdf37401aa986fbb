"""
Shared fixtures: keep logging setup from leaking between tests.
"""
import logging

import pytest

from src.config.settings import settings


@pytest.fixture(autouse=True)
def isolated_logging(monkeypatch):
    """No log file during tests; root handlers and level restored afterwards."""
    monkeypatch.setattr(settings, "DEBUG", True)
    root = logging.getLogger()
    handlers, level = list(root.handlers), root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)
