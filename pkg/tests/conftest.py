from __future__ import annotations

import pytest

from molespell.catalog import load_sample_catalog
from molespell.config import GameConfig

from support import small_catalog

# (criterion name, outcome) pairs collected from the acceptance module,
# replayed as one line each in the terminal summary.
_ACCEPTANCE_RESULTS: list[tuple[str, str]] = []


@pytest.fixture
def catalog():
    return small_catalog()


@pytest.fixture(scope="session")
def sample_catalog():
    return load_sample_catalog()


@pytest.fixture
def game_config():
    return GameConfig()


@pytest.hookimpl(wrapper=True)
def pytest_runtest_makereport(item, call):
    report = yield
    if report.when == "call":
        marker = item.get_closest_marker("acceptance")
        if marker is not None:
            name = marker.args[0] if marker.args else item.name
            _ACCEPTANCE_RESULTS.append((name, report.outcome))
    return report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE_RESULTS:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
