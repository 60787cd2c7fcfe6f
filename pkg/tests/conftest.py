from pathlib import Path

import pytest

from phtransform import compute_transform, embed
from phtransform.arrangement import PairSet, enumerate_cells

FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"

V_COORDS = {0: [-1, 1], 1: [0, 0], 2: [1, 1]}
BOOK_COORDS = {0: [1, 0, 0], 1: [0, 1, 0], 2: [0, 0, 1], 3: [0, 0, 0]}

ACCEPTANCE_LINES: list[str] = []


def make_v():
    return embed([[0, 1], [1, 2]], V_COORDS)


def make_book():
    return embed([[0, 1, 2], [0, 1, 3]], BOOK_COORDS)


@pytest.fixture(scope="session")
def V():
    return make_v()


@pytest.fixture(scope="session")
def book():
    return make_book()


@pytest.fixture(scope="session")
def v_cells(V):
    return enumerate_cells(V, PairSet.of(V))


@pytest.fixture(scope="session")
def book_cells(book):
    return enumerate_cells(book, PairSet.of(book))


@pytest.fixture(scope="session")
def v_transform(V):
    return compute_transform(V, [0, 1])


@pytest.fixture(scope="session")
def book_transform(book):
    return compute_transform(book, [0, 1])


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
