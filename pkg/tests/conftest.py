import sys
from pathlib import Path

import pytest

from queen_digraphs import FamilyAssignment, from_arcs, reverse, rotate_quarter

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def example1():
    D = from_arcs(5, [(1, 5), (2, 3), (3, 1), (4, 4), (5, 2)])
    F2 = reverse(D)
    fa = FamilyAssignment((D, F2), {(1, 5): 0, (2, 3): 0, (4, 4): 0, (3, 1): 1, (5, 2): 1})
    return D, fa


@pytest.fixture
def example2():
    D = from_arcs(4, [(1, 3), (2, 1), (3, 4), (4, 2)])
    F1 = from_arcs(8, [(1, 5), (2, 2), (3, 4), (4, 7), (5, 3), (6, 8), (7, 6), (8, 1)])
    F2 = from_arcs(8, [(1, 1), (2, 5), (3, 8), (4, 6), (5, 3), (6, 7), (7, 2), (8, 4)])
    F3 = rotate_quarter(F2)
    F4 = rotate_quarter(F3)
    fa = FamilyAssignment((F1, F2, F3, F4), {(2, 1): 0, (1, 3): 1, (3, 4): 2, (4, 2): 3})
    return D, fa


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
