import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import ACCEPTANCE  # noqa: E402
from quandlelink import homcount  # noqa: E402


@pytest.fixture(params=sorted(homcount.BACKENDS))
def engine(request):
    """Run a test once per available kernel backend."""
    return request.param


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
