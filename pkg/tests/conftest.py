import sys

import pytest

from diachromatic.digraph import Digraph
from diachromatic.families import transitive_tournament


@pytest.fixture
def c3():
    return Digraph(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def tt5():
    return transitive_tournament(5)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
