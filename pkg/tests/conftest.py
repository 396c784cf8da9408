"""Shared fixtures: a memoized tiling census and a seeded RNG."""

from __future__ import annotations

import random

import pytest

from lozenge import enumerate_all_tilings
from lozenge.lattice import PeriodicityMatrix
from lozenge.tiling import Tiling

_CENSUS: dict[PeriodicityMatrix, tuple[Tiling, ...]] = {}

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def census(matrix: PeriodicityMatrix) -> tuple[Tiling, ...]:
    """Every valid tiling of the quotient, computed once per matrix per run."""
    if matrix not in _CENSUS:
        _CENSUS[matrix] = enumerate_all_tilings(matrix, max_n=max(16, matrix.n))
    return _CENSUS[matrix]


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260825)
