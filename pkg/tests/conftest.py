import itertools
import pathlib

import pytest

from mdioid.semimodule import SemiMatrix, SemiVector
from mdioid.semiring import BOOLEAN, FiniteMonoid

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"

EXAMPLE_ROWS = ((1, 0, 1, 0), (0, 1, 1, 1), (1, 0, 1, 1), (0, 1, 0, 1))

# one line per acceptance criterion, filled by tests/test_acceptance.py
ACCEPTANCE_LINES = []


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def example_matrix():
    return SemiMatrix(BOOLEAN, EXAMPLE_ROWS)


@pytest.fixture
def example_vectors(example_matrix):
    return example_matrix.columns()


@pytest.fixture
def z2mult():
    # ({1, 0}, x) with the identity 1 listed first
    return FiniteMonoid.from_operation((1, 0), lambda a, b: a * b)


def bool_matrices(n):
    for flat in itertools.product((0, 1), repeat=n * n):
        yield SemiMatrix(BOOLEAN, tuple(flat[i * n:(i + 1) * n] for i in range(n)))


def bool_vectors(values):
    return [SemiVector(BOOLEAN, v) for v in values]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
