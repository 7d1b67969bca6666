from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

import acceptance_log
from alo_ipcm import ADDITIVE, FUZZY, MULTIPLICATIVE, load_matrix

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"
SCALE_LIST = (MULTIPLICATIVE, ADDITIVE, FUZZY)


def fixture_path(name: str) -> Path:
    return FIXTURES / f"{name}.json"


def load_fixture(name: str):
    return load_matrix(fixture_path(name))[1]


@pytest.fixture
def load():
    return load_fixture


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture(params=SCALE_LIST, ids=lambda g: g.name)
def scale(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if not acceptance_log.LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acceptance_log.LINES):
        terminalreporter.write_line(acceptance_log.LINES[number])
