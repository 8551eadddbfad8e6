import pytest

from chrompoly.corpus import desk_corpus, exhaustive, families, random_corpus
from chrompoly.graph import build_graph

# The running example: u, v, w, x relabeled 1, 2, 3, 4.
GSTAR_EDGES = [(1, 2), (1, 4), (2, 4), (2, 3)]

_acceptance_lines = []


def record_acceptance(number, passed, detail):
    _acceptance_lines.append(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture
def gstar():
    return build_graph(4, GSTAR_EDGES)


@pytest.fixture(scope="session")
def corpus():
    return desk_corpus()


@pytest.fixture(scope="session")
def small_corpus():
    """All graphs on at most 5 vertices."""
    return exhaustive(5)


@pytest.fixture(scope="session")
def random7():
    return random_corpus()


@pytest.fixture(scope="session")
def family8():
    return families(8)
