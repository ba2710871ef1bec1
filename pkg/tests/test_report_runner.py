"""Tests for check results, reports, run configuration and the case runner."""

import argparse
import concurrent.futures
import json
from unittest.mock import Mock, patch

import pytest

from src.qschur_calculus.errors import DomainError
from src.qschur_calculus.report import (
    CheckResult,
    Report,
    RunConfig,
    config_from_args,
    finish,
    print_report,
)
from src.qschur_calculus.runner import Case, evaluate_case, run_cases


def holds(*_):
    return None


def breaks(value):
    return f"value {value} is wrong"


def explodes():
    return 1 / 0


def results():
    return (
        CheckResult("b/2", "b", {"k": 2}),
        CheckResult("a/1", "a", {"k": 1}, "fail", "off by one"),
        CheckResult("c/3", "c", {}, "info", "module [1, 2]"),
    )


class TestCheckResult:
    def test_status_is_validated(self):
        with pytest.raises(DomainError, match="unknown status"):
            CheckResult("x", "x", status="maybe")

    def test_to_dict(self):
        assert CheckResult("x", "r", {"n": 2}).to_dict() == {
            "case_id": "x",
            "relation_id": "r",
            "parameters": {"n": 2},
            "status": "pass",
        }
        assert CheckResult("x", "r", status="fail", witness="w").to_dict()["witness"] == "w"

    def test_info_counts_as_passed(self):
        assert CheckResult("x", "r", status="info").passed


class TestReport:
    def test_ordering_and_counts(self):
        report = Report("tool", results())
        assert [r.case_id for r in report.results] == ["a/1", "b/2", "c/3"]
        assert (report.total, report.passed, report.failed) == (3, 1, 1)
        assert not report.ok
        assert [r.case_id for r in report.failures()] == ["a/1"]

    def test_merged_keeps_tool(self):
        merged = Report("first").merged(Report("second", results()))
        assert merged.tool == "first"
        assert merged.total == 3

    def test_json(self):
        data = json.loads(Report("tool", results(), version="1.2.3").to_json())
        assert data["tool"] == "tool"
        assert data["version"] == "1.2.3"
        assert data["summary"] == {"total": 3, "passed": 1, "failed": 1}
        assert [r["case_id"] for r in data["results"]] == ["a/1", "b/2", "c/3"]
        assert "witness" not in data["results"][1]

    def test_json_is_deterministic(self):
        assert Report("t", results()).to_json() == Report("t", results()[::-1]).to_json()


class TestRunConfig:
    @pytest.mark.parametrize(
        "kwargs, match",
        [
            ({"n": 1, "d": 1}, "n must be at least 2"),
            ({"n": 2, "d": 0}, "d must be at least 1"),
            ({"n": 2, "d": 1, "max_degree": 0}, "degree bound"),
            ({"n": 2, "d": 1, "panel_size": -1}, "panel size"),
            ({"n": 2, "d": 1, "jobs": 0}, "jobs must be positive"),
        ],
    )
    def test_validation(self, kwargs, match):
        with pytest.raises(DomainError, match=match):
            RunConfig(**kwargs)

    def test_selects(self):
        assert RunConfig(2, 1).selects("anything")
        config = RunConfig(2, 1, families=("EF",))
        assert config.selects("EF")
        assert not config.selects("curls")

    def test_from_args(self, tmp_path):
        args = argparse.Namespace(
            n=3, d=2, max_degree=4, panel_size=0, seed=7, family=["EF"], jobs=1, json=tmp_path / "r.json"
        )
        config = config_from_args(args)
        assert config == RunConfig(3, 2, 4, 0, 7, ("EF",), 1, tmp_path / "r.json")

    def test_from_args_without_families(self):
        args = argparse.Namespace(n=2, d=2, max_degree=6, panel_size=3, seed=0, jobs=None, json=None)
        assert config_from_args(args).families == ()


class TestFinish:
    def test_success(self, capsys):
        assert finish(Report("tool", (CheckResult("a", "a"), CheckResult("b", "b")))) == 0
        out = capsys.readouterr().out
        assert " tool " in out
        assert "✅ All 2 checks passed." in out

    def test_failure(self, capsys):
        assert finish(Report("tool", results())) == 1
        captured = capsys.readouterr()
        assert "❌ 1 of 3 checks failed." in captured.err
        assert "a/1" in captured.out
        assert "off by one" in captured.out
        assert "c/3" in captured.out
        assert "b/2" not in captured.out

    def test_verbose_lists_passes(self, capsys):
        print_report(Report("tool", results()), verbose=True)
        assert "b/2" in capsys.readouterr().out

    def test_json_file(self, tmp_path, capsys):
        path = tmp_path / "report.json"
        assert finish(Report("tool", (CheckResult("a", "a"),)), path, verbose=True) == 0
        assert json.loads(path.read_text(encoding="utf-8"))["summary"]["total"] == 1
        assert f"📄 Report written to {path}" in capsys.readouterr().out


class TestRunner:
    def cases(self):
        return [
            Case("z", "z", holds, (), {"k": 0}),
            Case("m", "m", breaks, (3,)),
            Case("a", "a", explodes),
        ]

    def test_evaluate_case(self):
        assert evaluate_case(Case("x", "x", holds)).status == "pass"
        failed = evaluate_case(Case("x", "x", breaks, (4,)))
        assert failed.status == "fail"
        assert failed.witness == "value 4 is wrong"

    def test_exception_becomes_failure(self):
        result = evaluate_case(Case("x", "x", explodes))
        assert result.status == "fail"
        assert result.witness.startswith("ZeroDivisionError")

    def test_in_process(self, capsys):
        out = run_cases(self.cases(), jobs=1, verbose=True)
        assert [r.case_id for r in out] == ["a", "m", "z"]
        assert [r.status for r in out] == ["fail", "fail", "pass"]
        assert out[2].parameters == {"k": 0}
        assert "🚀 Evaluating 3 cases using 1 cores." in capsys.readouterr().out

    def test_no_cases(self):
        assert run_cases([], jobs=1) == []

    def test_pool(self):
        with patch("concurrent.futures.ProcessPoolExecutor", concurrent.futures.ThreadPoolExecutor):
            out = run_cases(self.cases(), jobs=2)
        assert [r.case_id for r in out] == ["a", "m", "z"]
        assert [r.status for r in out] == ["fail", "fail", "pass"]

    def test_pool_exception(self, capsys):
        with patch("concurrent.futures.ProcessPoolExecutor") as mock_exec:
            mock_future = Mock()
            mock_future.result.side_effect = Exception("Boom")
            mock_exec.return_value.__enter__.return_value.submit.return_value = mock_future
            with patch("concurrent.futures.as_completed", return_value=[mock_future]):
                out = run_cases([Case("x", "x", holds)], jobs=2)
        assert out[0].status == "fail"
        assert "Boom" in out[0].witness
        assert "Boom" in capsys.readouterr().err
