#!/usr/bin/env python3
"""
Command line tools for the bimodule 2-representation:

    check-relations n d [--family NAME ...] [--invariants]
    eval-diagram FILE
    bubble (--cw | --ccw) -r R -i I --lambda (1,2)
    divided-power-check n d [--lambda (0,2) -i 1 --sign + -m 2]
"""

import argparse
import sys
from pathlib import Path

from ..diagrams.atoms import DOWN, UP
from ..diagrams.textio import format_letters, load_word
from ..diagrams.word import degree
from ..errors import DomainError
from ..polysym import format_poly
from ..report import MAX_WIDTH, Report, config_from_args, finish
from ..utils.cli_utils import EXIT_OK, add_size_arguments, add_suite_arguments, guarded, new_parser
from ..utils.color_utils import colour_str
from ..weights import format_weight, in_lambda, parse_weight
from .bubbles import bubble_value, thick_bubble_check
from .evaluate import describe_map, eval_diagram
from .relations import RELATION_FAMILIES
from .suite import (
    check_degree_coherence,
    check_functoriality,
    divided_power_check,
    divided_power_suite,
    relation_suite,
)


def run_check_relations(argv: list[str] | None = None) -> int:
    parser = new_parser(
        "check-relations",
        "Checks every relation of S(n,d) as an equality of bimodule maps.",
    )
    add_size_arguments(parser)
    add_suite_arguments(parser, families=True)
    # fmt: off
    parser.add_argument(
        "--invariants", action="store_true",
        help="Also run degree coherence, functoriality and the thick bubble checks.",
    )
    parser.add_argument(
        "--list-families", action="store_true",
        help="Print the relation family names and exit.",
    )
    # fmt: on

    def body(args: argparse.Namespace) -> int:
        if args.list_families:
            for name in RELATION_FAMILIES:
                print(name)
            return EXIT_OK
        config = config_from_args(args)
        print(f"🚀 Checking relations of S({config.n},{config.d})")
        report = relation_suite(config, args.verbose)
        if args.invariants:
            print("🔍 Checking degree coherence, functoriality and thick bubbles")
            report = report.merged(check_degree_coherence(config.n, config.d))
            report = report.merged(
                check_functoriality(config.n, config.d, config.seed, panel_size=config.panel_size)
            )
            report = report.merged(thick_bubble_check())
        return finish(report, config.json_path, args.verbose)

    return guarded(body, parser, argv)


def run_eval_diagram(argv: list[str] | None = None) -> int:
    parser = new_parser(
        "eval-diagram",
        "Evaluates a diagram word file and prints its map on the module basis.",
    )
    parser.add_argument("file", type=Path, help="Diagram word (text, or .json mirror).")

    def body(args: argparse.Namespace) -> int:
        w = load_word(args.file)
        m = eval_diagram(w)
        print(f" {args.file.name} ".center(MAX_WIDTH, "-"))
        print(f"region  {format_weight(w.lam)}  in S({w.n},{w.d})")
        print(f"bottom  {format_letters(w.bottom)}")
        print(f"top     {format_letters(w.top)}")
        print(f"degree  {degree(w)}")
        if not m.source.basis:
            print(colour_str("⚠️  The source boundary leaves Lambda(n,d); the map is zero.").yellow())
            return EXIT_OK
        for line in describe_map(m):
            print(f"  {line}")
        return EXIT_OK

    return guarded(body, parser, argv)


def run_bubble(argv: list[str] | None = None) -> int:
    parser = new_parser("bubble", "Prints the polynomial a bubble acts by.")
    # fmt: off
    orientation = parser.add_mutually_exclusive_group(required=True)
    orientation.add_argument("--cw", action="store_true", help="Clockwise bubble.")
    orientation.add_argument("--ccw", action="store_true", help="Counterclockwise bubble.")
    parser.add_argument("-r", type=int, required=True, help="Number of dots (may be negative).")
    parser.add_argument("-i", type=int, required=True, help="Colour of the bubble.")
    parser.add_argument(
        "--lambda", dest="lam", type=parse_weight, required=True,
        help="Weight of the outside region, e.g. (1,2).",
    )
    # fmt: on

    def body(args: argparse.Namespace) -> int:
        value = bubble_value(args.cw, args.r, args.i, args.lam, sum(args.lam))
        print(format_poly(value))
        return EXIT_OK

    return guarded(body, parser, argv)


def _sign(text: str) -> int:
    if text in ("+", "plus", "+1", "1"):
        return UP
    if text in ("-", "minus", "-1"):
        return DOWN
    raise argparse.ArgumentTypeError(f"sign must be + or -, got {text!r}")


def run_divided_power_check(argv: list[str] | None = None) -> int:
    parser = new_parser(
        "divided-power-check",
        "Checks the divided power idempotents: idempotency, vanishing and graded rank.",
    )
    add_size_arguments(parser)
    # fmt: off
    parser.add_argument(
        "--lambda", dest="lam", type=parse_weight, default=None,
        help="Check a single weight instead of all of Lambda(n,d).",
    )
    parser.add_argument("-i", type=int, default=1, help="Colour (single check, default: 1).")
    parser.add_argument("--sign", type=_sign, default=UP, help="+ or - (single check).")
    parser.add_argument("-m", type=int, default=2, help="Thickness, 1..3 (default: 2).")
    parser.add_argument("--max-degree", type=int, default=6, help="Degree window of the rank check.")
    parser.add_argument("--panel-size", type=int, default=3, help="Random evaluation points per comparison.")
    parser.add_argument("--seed", type=int, default=0, help="Seed of the random evaluation panels.")
    parser.add_argument("--json", type=Path, default=None, metavar="PATH", help="Write the JSON report to PATH.")
    parser.add_argument("-v", "--verbose", action="store_true", help="List passing checks too.")
    # fmt: on

    def body(args: argparse.Namespace) -> int:
        if args.lam is not None:
            if not in_lambda(args.lam, args.n, args.d):
                raise DomainError(f"{format_weight(args.lam)} is not in Lambda({args.n},{args.d})")
            report = divided_power_check(
                args.i, args.sign, args.m, args.lam, args.n, args.d, args.max_degree, args.panel_size, args.seed
            )
        else:
            print(f"🚀 Checking divided powers up to m={args.m} in S({args.n},{args.d})")
            report = divided_power_suite(
                args.n, args.d, args.m, args.max_degree, args.panel_size, args.seed
            )
        return finish(Report("divided-power-check", report.results), args.json, args.verbose)

    return guarded(body, parser, argv)


def main_check_relations() -> None:
    sys.exit(run_check_relations(sys.argv[1:]))


def main_eval_diagram() -> None:
    sys.exit(run_eval_diagram(sys.argv[1:]))


def main_bubble() -> None:
    sys.exit(run_bubble(sys.argv[1:]))


def main_divided_power_check() -> None:
    sys.exit(run_divided_power_check(sys.argv[1:]))


if __name__ == "__main__":
    main_check_relations()
