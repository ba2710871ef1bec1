#!/usr/bin/env python3
"""
Single entry point for every verification tool:

    qschur <tool> [arguments]

Each tool is also installed as a console script of its own.
"""

import sys
from collections.abc import Callable

from .bimrep.commands import (
    main_bubble,
    main_check_relations,
    main_divided_power_check,
    main_eval_diagram,
    run_bubble,
    run_check_relations,
    run_divided_power_check,
    run_eval_diagram,
)
from .qschur.commands import (
    main_check_presentation,
    main_hecke_check,
    main_schur_dim,
    main_sigma_check,
    run_check_presentation,
    run_hecke_check,
    run_schur_dim,
    run_sigma_check,
)
from .soergel.commands import main_soergel_check, run_soergel_check
from .supersym import main_super_schur, run_super_schur
from .utils.cli_utils import EXIT_OK, EXIT_USAGE, error

TOOLS: dict[str, Callable[[list[str] | None], int]] = {
    "check-presentation": run_check_presentation,
    "hecke-check": run_hecke_check,
    "sigma-check": run_sigma_check,
    "schur-dim": run_schur_dim,
    "check-relations": run_check_relations,
    "eval-diagram": run_eval_diagram,
    "bubble": run_bubble,
    "super-schur": run_super_schur,
    "soergel-check": run_soergel_check,
    "divided-power-check": run_divided_power_check,
}

__all__ = [
    "TOOLS",
    "main_bubble",
    "main_check_presentation",
    "main_check_relations",
    "main_cli",
    "main_divided_power_check",
    "main_eval_diagram",
    "main_hecke_check",
    "main_schur_dim",
    "main_sigma_check",
    "main_soergel_check",
    "main_super_schur",
    "run",
]


def usage() -> str:
    return "usage: qschur <tool> [arguments]\n\ntools:\n" + "\n".join(f"  {name}" for name in TOOLS)


def run(argv: list[str] | None = None) -> int:
    """Dispatches ``argv[0]`` to its tool and returns the exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] in ("-h", "--help"):
        print(usage())
        return EXIT_OK if argv else EXIT_USAGE
    tool = TOOLS.get(argv[0])
    if tool is None:
        error(f"unknown tool {argv[0]!r}")
        print(usage(), file=sys.stderr)
        return EXIT_USAGE
    return tool(argv[1:])


def main_cli() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main_cli()
