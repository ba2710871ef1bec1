#!/usr/bin/env python3
"""
Command line tools for the matrix model of S_q(n,d):

    schur-dim n d
    check-presentation n d [--tau] [--pi K] [--iota M] [--weyl]
    hecke-check d [--n N]
    sigma-check n d
"""

import argparse
import sys
from pathlib import Path

from ..report import MAX_WIDTH, Report, finish
from ..utils.cli_utils import EXIT_OK, add_size_arguments, guarded, new_parser
from ..weights import enumerate_dominant, format_weight
from .checks import (
    check_hecke,
    check_schur_presentation,
    hecke_commutation,
    iota_check,
    pi_check,
    schur_dimension,
    sigma_check,
    ssyt_count,
    tau_check,
    weyl_quotient_dimension,
)


def _add_report_arguments(parser: argparse.ArgumentParser) -> None:
    # fmt: off
    parser.add_argument("--json", type=Path, default=None, metavar="PATH", help="Write the JSON report to PATH.")
    parser.add_argument("-v", "--verbose", action="store_true", help="List passing checks too.")
    # fmt: on


def _finish(report: Report, args: argparse.Namespace) -> int:
    return finish(report, args.json, args.verbose)


def run_schur_dim(argv: list[str] | None = None) -> int:
    parser = new_parser("schur-dim", "Prints dim S_q(n,d) = binom(n^2+d-1, d).")
    add_size_arguments(parser)
    # fmt: off
    parser.add_argument("-v", "--verbose", action="store_true",
                        help="Also list the SSYT count of every dominant weight.")
    # fmt: on

    def body(args: argparse.Namespace) -> int:
        dim = schur_dimension(args.n, args.d)
        if args.verbose:
            for lam in enumerate_dominant(args.n, args.d):
                print(f"  {format_weight(lam)}: {ssyt_count(lam, args.n)} tableaux")
        print(dim)
        return EXIT_OK

    return guarded(body, parser, argv)


def run_check_presentation(argv: list[str] | None = None) -> int:
    parser = new_parser(
        "check-presentation",
        "Checks the presentation of S_q(n,d) on tensor space matrices.",
    )
    add_size_arguments(parser)
    # fmt: off
    parser.add_argument("--tau", action="store_true", help="Also check the anti-involution tau.")
    parser.add_argument("--pi", type=int, default=0, metavar="K",
                        help="Also check pi from S(n,d+nK) to S(n,d).")
    parser.add_argument("--iota", type=int, default=0, metavar="M",
                        help="Also check the embedding of S(n,d) into S(M,d).")
    parser.add_argument("--weyl", action="store_true",
                        help="Print the Weyl quotient dimension of every dominant weight.")
    # fmt: on
    _add_report_arguments(parser)

    def body(args: argparse.Namespace) -> int:
        n, d = args.n, args.d
        print(f"🚀 Checking the presentation of S_q({n},{d})")
        report = check_schur_presentation(n, d)
        if args.tau:
            report = report.merged(tau_check(n, d))
        if args.pi:
            report = report.merged(pi_check(n, d, args.pi))
        if args.iota:
            report = report.merged(iota_check(n, args.iota, d))
        if args.weyl:
            print(" Weyl quotients ".center(MAX_WIDTH, "-"))
            for lam in enumerate_dominant(n, d):
                dim = weyl_quotient_dimension(n, d, lam)
                print(f"  {format_weight(lam)}: {dim} (tableaux: {ssyt_count(lam, n)})")
        return _finish(report, args)

    return guarded(body, parser, argv)


def run_hecke_check(argv: list[str] | None = None) -> int:
    parser = new_parser(
        "hecke-check",
        "Checks the Hecke algebra relations and Schur-Weyl commutation on V^(x)d.",
    )
    parser.add_argument("d", type=int, help="Number of tensor factors.")
    parser.add_argument("--n", type=int, default=None, help="Dimension of V (default: d).")
    _add_report_arguments(parser)

    def body(args: argparse.Namespace) -> int:
        n = args.d if args.n is None else args.n
        report = check_hecke(args.d, n).merged(hecke_commutation(n, args.d))
        return _finish(report, args)

    return guarded(body, parser, argv)


def run_sigma_check(argv: list[str] | None = None) -> int:
    parser = new_parser(
        "sigma-check",
        "Checks that b_i on the (1^d) block is the word 1_d E_-i E_+i 1_d.",
    )
    add_size_arguments(parser)
    _add_report_arguments(parser)

    def body(args: argparse.Namespace) -> int:
        return _finish(sigma_check(args.n, args.d), args)

    return guarded(body, parser, argv)


def main_schur_dim() -> None:
    sys.exit(run_schur_dim(sys.argv[1:]))


def main_check_presentation() -> None:
    sys.exit(run_check_presentation(sys.argv[1:]))


def main_hecke_check() -> None:
    sys.exit(run_hecke_check(sys.argv[1:]))


def main_sigma_check() -> None:
    sys.exit(run_sigma_check(sys.argv[1:]))


if __name__ == "__main__":
    main_check_presentation()
