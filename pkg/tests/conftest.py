import numpy as np
import pytest

from envwitness.runner import catalog_spec, run_scenario


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


class _RunCache:
    def __init__(self):
        self._runs = {}

    def __call__(self, sid):
        if sid not in self._runs:
            self._runs[sid] = run_scenario(catalog_spec(sid))
        return self._runs[sid]


@pytest.fixture(scope="session")
def catalog_run():
    """Catalog scenario id -> RunRecord, each run at most once per session."""
    return _RunCache()



_ACCEPTANCE = {}


@pytest.fixture(scope="session")
def criterion():
    """Record and print one pass/fail line for a numbered acceptance criterion."""

    def record(number, title, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {title}" + (f" ({detail})" if detail else "")
        _ACCEPTANCE[number] = line
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for number in sorted(_ACCEPTANCE):
            terminalreporter.write_line(_ACCEPTANCE[number])
