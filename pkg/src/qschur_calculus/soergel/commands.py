#!/usr/bin/env python3
"""
Command line tool for the Soergel categories:

    soergel-check n d [--family NAME ...] [--no-oracle]
    soergel-check n d --word FILE
"""

import argparse
import sys
from pathlib import Path

from ..diagrams.textio import format_word
from ..report import MAX_WIDTH, config_from_args, finish
from ..utils.cli_utils import EXIT_OK, add_size_arguments, add_suite_arguments, guarded, new_parser
from ..utils.color_utils import colour_str
from .relations import SOERGEL_FAMILIES
from .sigma import sigma
from .suite import soergel_check
from .textio import format_colours, load_soergel_word


def _show_word(path: Path) -> int:
    w = load_soergel_word(path)
    image = sigma(w)
    print(f" {path.name} ".center(MAX_WIDTH, "-"))
    print(f"bottom  {format_colours(w.bottom)}")
    print(f"top     {format_colours(w.top)}")
    print(f"degree  {w.degree}")
    if image.degrees() != {w.degree}:
        print(colour_str(f"⚠️  Image degrees {sorted(image.degrees())}").yellow())
    for k, term in enumerate(image.terms):
        print(colour_str(f"# term {k}").dim())
        print(format_word(term), end="")
    return EXIT_OK


def run_soergel_check(argv: list[str] | None = None) -> int:
    parser = new_parser(
        "soergel-check",
        "Checks the Soergel relations through the functor into S(n,d).",
    )
    add_size_arguments(parser)
    add_suite_arguments(parser, families=True)
    # fmt: off
    parser.add_argument(
        "--no-oracle", action="store_true",
        help="Skip the generator oracle and the box polynomial checks.",
    )
    parser.add_argument(
        "--word", type=Path, default=None, metavar="FILE",
        help="Print the image of a Soergel word file instead of running the suite.",
    )
    parser.add_argument(
        "--list-families", action="store_true",
        help="Print the relation family names and exit.",
    )
    # fmt: on

    def body(args: argparse.Namespace) -> int:
        if args.list_families:
            for name in SOERGEL_FAMILIES:
                print(name)
            return EXIT_OK
        if args.word is not None:
            return _show_word(args.word)
        config = config_from_args(args)
        kind = "boxes" if config.d < config.n else "no boxes"
        print(f"🚀 Checking Soergel relations in S({config.n},{config.d}), {kind}")
        report = soergel_check(config, not args.no_oracle, args.verbose)
        return finish(report, config.json_path, args.verbose)

    return guarded(body, parser, argv)


def main_soergel_check() -> None:
    sys.exit(run_soergel_check(sys.argv[1:]))


if __name__ == "__main__":
    main_soergel_check()
