from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings

from fusionring import build_root_system, make_alcove

settings.register_profile(
    "repo", derandomize=True, deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


@pytest.fixture
def alcove_of():
    def make(type_, rank, ell):
        return make_alcove(build_root_system(type_, rank), ell)
    return make


@pytest.fixture(autouse=True)
def _no_env_cache(monkeypatch):
    # keep the disk cache out of unit tests unless a test opts in
    monkeypatch.delenv("FUSIONRING_CACHE_DIR", raising=False)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
