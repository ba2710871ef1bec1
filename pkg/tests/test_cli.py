"""Tests for the CLI module."""

import runpy
from unittest.mock import patch

import pytest

from src.qschur_calculus import cli
from src.qschur_calculus.cli import TOOLS, main_cli, main_schur_dim, run, usage
from src.qschur_calculus.errors import DomainError
from src.qschur_calculus.utils.cli_utils import guarded, new_parser


class TestCLIEntryPoints:
    """Test individual CLI entry point functions."""

    def test_main_schur_dim(self, capsys):
        with patch("sys.argv", ["schur-dim", "2", "2"]), pytest.raises(SystemExit) as exc:
            main_schur_dim()
        assert exc.value.code == 0
        assert capsys.readouterr().out.strip() == "10"

    def test_every_tool_has_a_console_script(self):
        for name in TOOLS:
            main_name = "main_" + name.replace("-", "_")
            assert callable(getattr(cli, main_name))


class TestCLIDispatcher:
    """Test the main CLI tool dispatcher."""

    def test_dispatch_schur_dim(self, capsys):
        assert run(["schur-dim", "3", "2"]) == 0
        assert capsys.readouterr().out.strip() == "45"

    def test_dispatch_calls_tool_with_remaining_args(self):
        with patch.dict(cli.TOOLS, {"bubble": lambda argv: 7}):
            assert run(["bubble", "--cw"]) == 7

    def test_dispatch_invalid(self, capsys):
        assert run(["invalid"]) == 2
        captured = capsys.readouterr()
        assert "unknown tool 'invalid'" in captured.err
        assert "usage:" in captured.err

    def test_dispatch_no_args(self, capsys):
        assert run([]) == 2
        assert "usage:" in capsys.readouterr().out

    def test_dispatch_help(self, capsys):
        assert run(["--help"]) == 0
        out = capsys.readouterr().out
        for name in TOOLS:
            assert name in out

    def test_usage_lists_tools(self):
        assert usage().count("\n  ") == len(TOOLS)

    def test_main_cli_exit_code(self):
        with patch("sys.argv", ["qschur"]), pytest.raises(SystemExit) as exc:
            main_cli()
        assert exc.value.code == 2


def test_cli_main_block(capsys):
    """Test cli.py __main__ block."""
    with patch("sys.argv", ["cli.py", "schur-dim", "2", "1"]), pytest.raises(SystemExit) as exc:
        runpy.run_module("src.qschur_calculus.cli", run_name="__main__")
    assert exc.value.code == 0
    assert capsys.readouterr().out.strip() == "4"


class TestGuarded:
    """Test the exit code mapping shared by every tool."""

    def parser(self):
        return new_parser("demo", "Demo tool.")

    def test_body_result(self):
        assert guarded(lambda args: 1, self.parser(), []) == 1

    def test_library_error(self, capsys):
        def body(args):
            raise DomainError("n must be at least 2, got 1")

        assert guarded(body, self.parser(), []) == 2
        assert "❌ Error: n must be at least 2, got 1" in capsys.readouterr().err

    def test_cancelled(self, capsys):
        def body(args):
            raise KeyboardInterrupt

        assert guarded(body, self.parser(), []) == 130
        assert "Operation cancelled by user." in capsys.readouterr().out

    def test_version(self, capsys):
        assert guarded(lambda args: 0, self.parser(), ["--version"]) == 0
        assert capsys.readouterr().out.startswith("demo ")
