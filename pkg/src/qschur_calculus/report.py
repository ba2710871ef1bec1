"""Check results, run configuration and report emission."""

import json
import shutil
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from . import __version__
from .errors import DomainError
from .utils.color_utils import colour_str, status_str

try:
    MAX_WIDTH = min(shutil.get_terminal_size()[0], 80)
except (ValueError, OSError):
    MAX_WIDTH = 80

STATUSES = ("pass", "fail", "info")


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one relation instance."""

    case_id: str
    relation_id: str
    parameters: dict[str, Any] = field(default_factory=dict)
    status: str = "pass"
    witness: str | None = None

    def __post_init__(self) -> None:
        if self.status not in STATUSES:
            raise DomainError(f"unknown status {self.status!r}")

    @property
    def passed(self) -> bool:
        return self.status != "fail"

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "case_id": self.case_id,
            "relation_id": self.relation_id,
            "parameters": self.parameters,
            "status": self.status,
        }
        if self.witness is not None:
            data["witness"] = self.witness
        return data


@dataclass(frozen=True)
class Report:
    """An ordered collection of check results for one tool run."""

    tool: str
    results: tuple[CheckResult, ...] = ()
    version: str = __version__

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.results, key=lambda r: r.case_id))
        object.__setattr__(self, "results", ordered)

    @property
    def total(self) -> int:
        return len(self.results)

    @property
    def failed(self) -> int:
        return sum(1 for r in self.results if r.status == "fail")

    @property
    def passed(self) -> int:
        return sum(1 for r in self.results if r.status == "pass")

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if r.status == "fail"]

    def merged(self, other: "Report") -> "Report":
        return Report(self.tool, self.results + other.results, self.version)

    def to_json(self) -> str:
        """Deterministic JSON text (sorted keys, results sorted by case id)."""
        payload = {
            "tool": self.tool,
            "version": self.version,
            "summary": {
                "total": self.total,
                "passed": self.passed,
                "failed": self.failed,
            },
            "results": [r.to_dict() for r in self.results],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"


@dataclass(frozen=True)
class RunConfig:
    """Parameters shared by the verification suites."""

    n: int
    d: int
    max_degree: int = 6
    panel_size: int = 3
    seed: int = 0
    families: tuple[str, ...] = ()
    jobs: int | None = None
    json_path: Path | None = None

    def __post_init__(self) -> None:
        if self.n < 2:
            raise DomainError(f"n must be at least 2, got {self.n}")
        if self.d < 1:
            raise DomainError(f"d must be at least 1, got {self.d}")
        if self.max_degree < 1 or self.panel_size < 0:
            raise DomainError("degree bound must be positive and panel size >= 0")
        if self.jobs is not None and self.jobs < 1:
            raise DomainError(f"jobs must be positive, got {self.jobs}")

    def selects(self, family: str) -> bool:
        return not self.families or family in self.families


def write_json(report: Report, path: Path) -> None:
    path.write_text(report.to_json(), encoding="utf-8")


def print_report(report: Report, verbose: bool = False) -> None:
    """Human readable summary on stdout; failures are always listed."""
    print(f" {report.tool} ".center(MAX_WIDTH, "-"))
    for result in report.results:
        if result.status == "pass" and not verbose:
            continue
        line = f"  {status_str(result.status)} {result.case_id}"
        print(line)
        if result.witness:
            print(colour_str(f"      {result.witness}").dim())

    if report.failed:
        msg = f"❌ {report.failed} of {report.total} checks failed."
        print(f"\n{colour_str(msg).red().bright()}", file=sys.stderr)
    else:
        msg = f"✅ All {report.total} checks passed."
        print(colour_str(msg).green())


def finish(report: Report, json_path: Path | None = None, verbose: bool = False) -> int:
    """Prints the summary, writes the JSON report if asked and returns the exit code."""
    print_report(report, verbose)
    if json_path is not None:
        write_json(report, json_path)
        if verbose:
            print(f"📄 Report written to {json_path}")
    return 0 if report.ok else 1


def config_from_args(args: Any) -> RunConfig:
    """RunConfig from parsed suite arguments (see utils.cli_utils)."""
    return RunConfig(
        n=args.n,
        d=args.d,
        max_degree=args.max_degree,
        panel_size=args.panel_size,
        seed=args.seed,
        families=tuple(getattr(args, "family", ()) or ()),
        jobs=args.jobs,
        json_path=args.json,
    )
