"""Tests for the package metadata and exports."""

import importlib
from importlib.metadata import PackageNotFoundError
from pathlib import Path
from unittest.mock import patch

import regex as re

import src.qschur_calculus as init_mod


def test_version_falls_back_when_not_installed():
    with patch("importlib.metadata.version", side_effect=PackageNotFoundError):
        importlib.reload(init_mod)
        assert init_mod.__version__ == "0.0.0.dev0+unknown"

    # restore the installed version for later tests
    importlib.reload(init_mod)


def test_subpackages_are_exported():
    assert init_mod.__all__ == ["bimrep", "diagrams", "qschur", "soergel", "utils"]
    for name in init_mod.__all__:
        assert hasattr(init_mod, name)


def test_report_carries_package_version():
    from src.qschur_calculus.report import Report

    assert Report("tool").version == init_mod.__version__


def test_documentation_index_links_resolve():
    docs = Path(__file__).parent.parent / "docs"
    links = re.findall(r"\]\(([\w.-]+\.md)\)", (docs / "README.md").read_text())
    assert "conventions.md" in links
    for link in links:
        assert (docs / link).is_file(), link
