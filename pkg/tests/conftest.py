"""Pytest configuration and fixtures."""

import sys
from pathlib import Path

import pytest

# Add src directory to path for testing
src_path = Path(__file__).parent.parent / "src"
sys.path.insert(0, str(src_path))


@pytest.fixture
def run_config():
    """Factory for in-process suite configurations."""
    from src.qschur_calculus.report import RunConfig

    def make(n: int, d: int, *families: str, **kwargs) -> RunConfig:
        kwargs.setdefault("jobs", 1)
        kwargs.setdefault("panel_size", 1)
        return RunConfig(n=n, d=d, families=tuple(families), **kwargs)

    return make


@pytest.fixture
def diagram_file(tmp_path):
    """Writes a diagram word text file and returns its path."""

    def write(text: str, name: str = "word.txt") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return write


@pytest.fixture
def sample_words():
    """Small diagram and Soergel word texts used across the tests."""
    return {
        "cup_cap": (
            "n=2, d=2, lambda=(1,1), shift=0, coeff=1, bottom=[]\n"
            "cupFE(1)\n"
            "capFE(1)\n"
        ),
        "dotted": (
            "# one dotted up strand\n"
            "n=2, d=2, lambda=(0,2), bottom=[+1]\n"
            "dotU(1,1)\n"
        ),
        "barbell": (
            "n=3, d=3, coeff=1, bottom=[]\n"
            "startDot(1)\n"
            "endDot(1)\n"
        ),
        "six": (
            "n=3, d=3, bottom=[1,2,1]\n"
            "six(1,2)\n"
        ),
    }
