import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from helpers import top  # noqa: E402


@pytest.fixture
def space_ab():
    """Three points, single proper open set {a, b}."""
    return top(3, "ab")


@pytest.fixture
def space_a_bc():
    return top(3, "a", "bc")


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
