"""Argument handling and exit codes shared by the command line tools."""

import argparse
import sys
from collections.abc import Callable
from pathlib import Path

from .. import __version__
from ..errors import QSchurError
from .color_utils import colour_str

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CANCELLED = 130


def new_parser(prog: str, description: str) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=prog, description=description)
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    return parser


def add_size_arguments(parser: argparse.ArgumentParser) -> None:
    # fmt: off
    parser.add_argument("n", type=int, help="Number of colours plus one (gl_n).")
    parser.add_argument("d", type=int, help="Degree of the tensor power.")
    # fmt: on


def add_suite_arguments(parser: argparse.ArgumentParser, families: bool = False) -> None:
    """The flags every verification suite understands."""
    # fmt: off
    if families:
        parser.add_argument(
            "--family", "-f", action="append", default=[], metavar="NAME",
            help="Only run the named relation family (repeatable).",
        )
    parser.add_argument(
        "--seed", type=int, default=0,
        help="Seed of the random evaluation panels (default: 0).",
    )
    parser.add_argument(
        "--max-degree", type=int, default=6,
        help="Degree bound for series truncation and rank checks (default: 6).",
    )
    parser.add_argument(
        "--panel-size", type=int, default=3,
        help="Random evaluation points per map comparison (default: 3).",
    )
    parser.add_argument(
        "--jobs", "-j", type=int, default=None,
        help="Worker processes (default: all cores, 1 runs in-process).",
    )
    parser.add_argument(
        "--json", type=Path, default=None, metavar="PATH",
        help="Write the JSON report to PATH.",
    )
    parser.add_argument(
        "-v", "--verbose", action="store_true",
        help="List passing checks as well as failures.",
    )
    # fmt: on


def error(msg: str) -> None:
    print(colour_str(f"❌ Error: {msg}").red().bright(), file=sys.stderr)


def guarded(body: Callable[[argparse.Namespace], int], parser: argparse.ArgumentParser, argv: list[str] | None) -> int:
    """
    Parses ``argv`` and runs ``body``, mapping argparse exits, input errors
    and Ctrl-C onto exit codes instead of raising.
    """
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        return body(args)
    except (QSchurError, OSError) as e:
        error(str(e))
        return EXIT_USAGE
    except KeyboardInterrupt:
        print("Operation cancelled by user.")
        return EXIT_CANCELLED
