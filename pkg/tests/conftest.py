"""Shared fixtures."""

from pathlib import Path

import pytest

from src.apps.automaton.services.counting import clear_memo


GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture
def golden_dir() -> Path:
    """Directory holding the reference outputs."""
    return GOLDEN_DIR


@pytest.fixture
def golden_lines():
    """Read a golden file as a list of lines."""

    def _read(name: str) -> list[str]:
        return (GOLDEN_DIR / name).read_text(encoding="utf-8").splitlines()

    return _read


@pytest.fixture
def fresh_memo():
    """Empty the counting memo table before and after the test."""
    clear_memo()
    yield
    clear_memo()
