import pytest

from chordal_braids.graph import from_edges


@pytest.fixture
def p3():
    return from_edges("abc", [("a", "b"), ("b", "c")])


@pytest.fixture
def k3():
    return from_edges("xyz", [("x", "y"), ("x", "z"), ("y", "z")])


@pytest.fixture
def k4():
    return from_edges([1, 2, 3, 4], [(i, j) for i in range(1, 5) for j in range(i + 1, 5)])


@pytest.fixture
def c4():
    return from_edges("abcd", [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import REPORT

    if REPORT:
        terminalreporter.section("acceptance criteria")
        for line in REPORT:
            terminalreporter.write_line(line)
