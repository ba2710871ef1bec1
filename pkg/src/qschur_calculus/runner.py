"""Parallel evaluation of independent check cases."""

import concurrent.futures
import sys
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from typing import Any

from .report import CheckResult
from .utils.color_utils import colour_str

# A check returns None when the instance holds, otherwise a witness string.
CheckFn = Callable[..., str | None]


@dataclass(frozen=True)
class Case:
    """One relation instance. ``check`` must be a module-level function."""

    case_id: str
    relation_id: str
    check: CheckFn
    args: tuple[Any, ...] = ()
    parameters: dict[str, Any] = field(default_factory=dict)


def evaluate_case(case: Case) -> CheckResult:
    """Run a single case, turning exceptions into failed results."""
    try:
        witness = case.check(*case.args)
    except Exception as e:
        witness = f"{type(e).__name__}: {e}"
    return CheckResult(
        case_id=case.case_id,
        relation_id=case.relation_id,
        parameters=case.parameters,
        status="pass" if witness is None else "fail",
        witness=witness,
    )


def run_cases(
    cases: Iterable[Case], jobs: int | None = None, verbose: bool = False
) -> list[CheckResult]:
    """Evaluates cases, in-process for jobs=1 and on a process pool otherwise."""
    cases = list(cases)
    if not cases:
        return []

    if verbose:
        job_str = f"{jobs if jobs else 'all available'} cores"
        print(f"🚀 Evaluating {len(cases)} cases using {job_str}.")

    if jobs == 1:
        return sorted((evaluate_case(c) for c in cases), key=lambda r: r.case_id)

    results = []
    with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as executor:
        future_to_case = {executor.submit(evaluate_case, case): case for case in cases}
        for future in concurrent.futures.as_completed(future_to_case):
            case = future_to_case[future]
            try:
                results.append(future.result())
            except Exception as e:
                msg = f"A task generated an exception: {e}"
                print(colour_str(msg).red(), file=sys.stderr)
                results.append(
                    CheckResult(
                        case_id=case.case_id,
                        relation_id=case.relation_id,
                        parameters=case.parameters,
                        status="fail",
                        witness=msg,
                    )
                )
    return sorted(results, key=lambda r: r.case_id)
