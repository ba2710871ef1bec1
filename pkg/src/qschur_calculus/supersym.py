"""Supersymmetric elementary and Schur polynomials in two alphabets."""

import argparse
import sys
from collections import Counter
from dataclasses import dataclass
from functools import cache

from sympy import Matrix
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyElement, PolyRing

from .errors import AlphabetSizeError, DomainError
from .polysym import (
    Alphabet,
    complete,
    det,
    elem,
    format_poly,
    identity_oracles,
    polynomial_ring,
    schur,
)
from .report import CheckResult, Report, finish
from .utils.cli_utils import EXIT_OK, guarded, new_parser
from .weights import Weight, parse_weight, partitions


@dataclass(frozen=True)
class SuperPair:
    """Two disjoint alphabets X (even) and Y (odd) of one ring."""

    X: Alphabet
    Y: Alphabet

    def __post_init__(self) -> None:
        if self.X.ring != self.Y.ring:
            raise DomainError("the two alphabets must share a ring")
        if set(self.X.variables) & set(self.Y.variables):
            raise DomainError("the two alphabets must be disjoint")

    @property
    def ring(self) -> PolyRing:
        return self.X.ring

    @property
    def a(self) -> int:
        return len(self.X)

    @property
    def b(self) -> int:
        return len(self.Y)

    def swapped(self) -> "SuperPair":
        return SuperPair(self.Y, self.X)


def super_pair(a: int, b: int) -> SuperPair:
    """A fresh ring Q[x1..xa, y1..yb] with its two alphabets."""
    if a < 0 or b < 0:
        raise DomainError(f"alphabet sizes must be non-negative, got ({a}, {b})")
    _, alph = polynomial_ring(x=a, y=b)
    return SuperPair(alph["x"], alph["y"])


def conjugate(alpha: Weight) -> Weight:
    parts = [p for p in alpha if p]
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > k) for k in range(parts[0]))


def in_gamma(alpha: Weight, a: int, b: int) -> bool:
    """alpha_j <= b for every j > a (the (a, b) hook condition)."""
    return all(part <= b for part in alpha[a:])


def hook_partitions(degree: int, a: int, b: int) -> list[Weight]:
    return [alpha for alpha in partitions(degree) if in_gamma(alpha, a, b)]


@cache
def _super_elem_cached(j: int, pair: SuperPair) -> PolyElement:
    R = pair.ring
    if j < 0:
        return R.zero
    total = R.zero
    for s in range(0, min(j, pair.b) + 1):
        total += (-1) ** s * complete(j - s, pair.X) * elem(s, pair.Y)
    return total


def super_elem(j: int, pair: SuperPair) -> PolyElement:
    """e_j(X, Y) = sum_s (-1)^s h_{j-s}(X) e_s(Y); zero for j < 0."""
    return _super_elem_cached(j, pair)


def super_schur(alpha: Weight, pair: SuperPair) -> PolyElement:
    """pi_alpha(X, Y) = det(e_{alpha_i + j - i}(X, Y))."""
    parts = [p for p in alpha if p]
    if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
        raise DomainError(f"not a partition: {alpha}")
    rows = [
        [super_elem(parts[i] + j - i, pair) for j in range(len(parts))]
        for i in range(len(parts))
    ]
    return det(rows, pair.ring)


def _horizontal_strips(shape: Weight, size: int) -> list[Weight]:
    """Shapes obtained from ``shape`` by adding a horizontal strip of ``size`` cells."""
    rows = list(shape) + [0]
    out: list[Weight] = []

    def extend(k: int, remaining: int, acc: list[int]) -> None:
        if k == len(rows):
            if remaining == 0:
                out.append(tuple(p for p in acc if p))
            return
        cap = remaining if k == 0 else min(remaining, rows[k - 1] - rows[k])
        for add in range(cap, -1, -1):
            extend(k + 1, remaining - add, [*acc, rows[k] + add])

    extend(0, size, [])
    return out


def lr_tableau(alpha: Weight, beta: Weight) -> dict[Weight, int]:
    """
    Littlewood-Richardson coefficients c^gamma_{alpha beta} by counting
    skew tableaux of shape gamma/alpha and content beta with a lattice reverse
    reading word.
    """
    alpha = tuple(p for p in alpha if p)
    beta = tuple(p for p in beta if p)
    counts: Counter[Weight] = Counter()

    def grow(letter: int, shape: Weight, filling: dict[tuple[int, int], int]) -> None:
        if letter > len(beta):
            if _is_lattice(shape, filling):
                counts[shape] += 1
            return
        for new_shape in _horizontal_strips(shape, beta[letter - 1]):
            cells = {
                (row, col): letter
                for row, length in enumerate(new_shape)
                for col in range(shape[row] if row < len(shape) else 0, length)
            }
            grow(letter + 1, new_shape, filling | cells)

    grow(1, alpha, {})
    return dict(counts)


def _is_lattice(shape: Weight, filling: dict[tuple[int, int], int]) -> bool:
    seen: Counter[int] = Counter()
    for row in range(len(shape)):
        for col in range(shape[row] - 1, -1, -1):
            letter = filling.get((row, col))
            if letter is None:
                continue
            seen[letter] += 1
            if letter > 1 and seen[letter] > seen[letter - 1]:
                return False
    return True


def _rank(polys: list[PolyElement]) -> int:
    if not polys:
        return 0
    monomials = sorted({m for p in polys for m in p.keys()})
    if not monomials:
        return 0
    rows = [[p.get(m, QQ.zero) for p in polys] for m in monomials]
    return DomainMatrix(rows, (len(monomials), len(polys)), QQ).rank()


def lr_expand(alpha: Weight, beta: Weight, pair: SuperPair | None = None) -> dict[Weight, int]:
    """
    Expands pi_alpha * pi_beta in the super-Schur basis by an exact linear solve.

    Without an explicit pair the even alphabet has l(alpha) + l(beta) variables
    and the odd one a single variable, enough to separate every term.
    """
    alpha = tuple(p for p in alpha if p)
    beta = tuple(p for p in beta if p)
    degree = sum(alpha) + sum(beta)
    if pair is None:
        pair = super_pair(len(alpha) + len(beta), 1)
    basis = hook_partitions(degree, pair.a, pair.b)
    columns = [super_schur(gamma, pair) for gamma in basis]
    product = super_schur(alpha, pair) * super_schur(beta, pair)
    if not product:
        return {}
    if _rank(columns) != len(columns):
        raise AlphabetSizeError(
            f"super-Schur basis of degree {degree} is degenerate for a={pair.a}, b={pair.b}"
        )

    monomials = sorted({m for p in [*columns, product] for m in p.keys()})
    to_sympy = pair.ring.domain.to_sympy
    A = Matrix([[to_sympy(p.get(m, QQ.zero)) for p in columns] for m in monomials])
    v = Matrix([to_sympy(product.get(m, QQ.zero)) for m in monomials])
    try:
        solution, _ = A.gauss_jordan_solve(v)
    except ValueError as e:
        raise AlphabetSizeError(
            f"product is not in the span of the super-Schur basis for a={pair.a}, b={pair.b}"
        ) from e

    result: dict[Weight, int] = {}
    for gamma, value in zip(basis, solution, strict=True):
        if value != 0:
            if not value.is_integer:
                raise AlphabetSizeError(f"non-integral coefficient {value} for {gamma}")
            result[gamma] = int(value)
    return result


def conjugate_duality_check(alpha: Weight, pair: SuperPair) -> bool:
    """pi_alpha(X, Y) == (-1)^|alpha| pi_alpha'(Y, X)."""
    sign = (-1) ** sum(alpha)
    return super_schur(alpha, pair) == sign * super_schur(conjugate(alpha), pair.swapped())


def supersymmetry_check(p: PolyElement, pair: SuperPair) -> bool:
    """Setting y1 = x1 leaves a polynomial independent of x1."""
    if pair.a == 0 or pair.b == 0:
        raise DomainError("supersymmetry needs both alphabets non-empty")
    x1, y1 = pair.X.variables[0], pair.Y.variables[0]
    return p.compose(y1, x1).diff(x1) == 0


def specialization_check(alpha: Weight, size: int) -> bool:
    """pi_alpha(X, {}) is s_alpha(X) and pi_alpha({}, Y) is (-1)^|alpha| s_alpha'(Y)."""
    R, alph = polynomial_ring(x=size, y=size)
    X, Y = alph["x"], alph["y"]
    empty = Alphabet(R, ())
    even = super_schur(alpha, SuperPair(X, empty)) == schur(alpha, X)
    odd = super_schur(alpha, SuperPair(empty, Y)) == (-1) ** sum(alpha) * schur(
        conjugate(alpha), Y
    )
    return even and odd


def basis_check(a: int, b: int, degree: int) -> bool:
    """The pi_alpha with alpha a hook partition of one degree are linearly independent."""
    pair = super_pair(a, b)
    polys = [super_schur(alpha, pair) for alpha in hook_partitions(degree, a, b)]
    return _rank(polys) == len(polys)


def vanishing_check(alpha: Weight, pair: SuperPair) -> bool:
    """pi_alpha vanishes exactly when alpha is not a hook partition."""
    return (super_schur(alpha, pair) == 0) != in_gamma(alpha, pair.a, pair.b)


def generating_function_check(a: int, b: int, max_degree: int) -> bool:
    """
    prod_r (1 - y_r Z) / prod_s (1 - x_s Z) = sum_j e_j(X, Y) Z^j up to Z^max_degree,
    checked after clearing the denominator.
    """
    R, alph = polynomial_ring(x=a, y=b, z=1)
    pair = SuperPair(alph["x"], alph["y"])
    (Z,) = alph["z"].variables
    numerator = R.one
    for y in pair.Y:
        numerator *= R.one - y * Z
    denominator = R.one
    for x in pair.X:
        denominator *= R.one - x * Z
    series = sum((super_elem(j, pair) * Z**j for j in range(max_degree + 1)), R.zero)
    difference = series * denominator - numerator
    z_index = R.gens.index(Z)
    return all(monom[z_index] > max_degree for monom in difference.keys())


def super_oracles(
    max_size: int = 3, max_degree: int = 4, max_super_degree: int = 5, max_lr: int = 5
) -> Report:
    """
    Runs every super-Schur identity on alphabets of size <= max_size.

    Basis, vanishing and conjugation go up to ``max_degree``, supersymmetry up
    to ``max_super_degree`` and the Littlewood-Richardson comparison covers
    every pair with |alpha| + |beta| <= max_lr.
    """
    results: list[CheckResult] = []

    def record(case_id: str, relation: str, ok: bool, witness: str = "", **params) -> None:
        results.append(
            CheckResult(
                case_id=case_id,
                relation_id=relation,
                parameters=params,
                status="pass" if ok else "fail",
                witness=None if ok else witness,
            )
        )

    for a in range(max_size + 1):
        for b in range(max_size + 1):
            pair = super_pair(a, b)
            record(
                f"generating-function/{a}/{b}",
                "generating-function",
                generating_function_check(a, b, max_degree),
                a=a,
                b=b,
            )
            for degree in range(1, max(max_degree, max_super_degree) + 1):
                if degree <= max_degree:
                    record(
                        f"basis/{a}/{b}/{degree}", "basis", basis_check(a, b, degree), a=a, b=b
                    )
                for alpha in partitions(degree):
                    tag = "".join(str(p) for p in alpha)
                    pi = super_schur(alpha, pair)
                    if degree <= max_degree:
                        record(
                            f"vanishing/{a}/{b}/{tag}",
                            "vanishing",
                            vanishing_check(alpha, pair),
                            format_poly(pi),
                            a=a,
                            b=b,
                        )
                        record(
                            f"conjugate/{a}/{b}/{tag}",
                            "conjugate",
                            conjugate_duality_check(alpha, pair),
                            a=a,
                            b=b,
                        )
                    if a and b and degree <= max_super_degree:
                        record(
                            f"supersymmetry/{a}/{b}/{tag}",
                            "supersymmetry",
                            supersymmetry_check(pi, pair),
                            format_poly(pi),
                            a=a,
                            b=b,
                        )

    for degree in range(1, max_degree + 1):
        for alpha in partitions(degree):
            tag = "".join(str(p) for p in alpha)
            record(
                f"specialisation/{tag}",
                "specialisation",
                specialization_check(alpha, max_size + 1),
            )

    for d1 in range(1, max_lr):
        for d2 in range(1, max_lr - d1 + 1):
            for alpha in partitions(d1):
                for beta in partitions(d2):
                    by_solve = lr_expand(alpha, beta)
                    by_tableau = lr_tableau(alpha, beta)
                    tag = "".join(map(str, alpha)) + "x" + "".join(map(str, beta))
                    record(
                        f"littlewood-richardson/{tag}",
                        "littlewood-richardson",
                        by_solve == by_tableau,
                        f"{by_solve} != {by_tableau}",
                    )

    return Report("super-schur", tuple(results))


def run_super_schur(argv: list[str] | None = None) -> int:
    """``super-schur a b "(2,1)"`` prints pi_alpha(x1..xa; y1..yb)."""
    parser = new_parser(
        "super-schur",
        "Prints the super-Schur polynomial pi_alpha in a even and b odd variables.",
    )
    # fmt: off
    parser.add_argument("a", type=int, nargs="?", help="Size of the even alphabet x.")
    parser.add_argument("b", type=int, nargs="?", help="Size of the odd alphabet y.")
    parser.add_argument("alpha", type=parse_weight, nargs="?", help="Partition, e.g. (2,1).")
    parser.add_argument(
        "--check", action="store_true",
        help="Run the symmetric and supersymmetric identity checks instead.",
    )
    parser.add_argument("--max-degree", type=int, default=4, help="Degree bound of --check.")
    parser.add_argument(
        "--max-lr", type=int, default=5,
        help="Bound on |alpha| + |beta| for the Littlewood-Richardson comparison.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="List passing checks too.")
    # fmt: on

    def body(args: argparse.Namespace) -> int:
        if args.check:
            report = identity_oracles(max_degree=args.max_degree)
            report = Report("super-schur", report.results).merged(
                super_oracles(max_degree=args.max_degree, max_lr=args.max_lr)
            )
            return finish(report, verbose=args.verbose)
        if args.a is None or args.b is None or args.alpha is None:
            parser.print_usage(sys.stderr)
            raise DomainError("a, b and alpha are required unless --check is given")
        print(format_poly(super_schur(args.alpha, super_pair(args.a, args.b))))
        return EXIT_OK

    return guarded(body, parser, argv)


def main_super_schur() -> None:
    sys.exit(run_super_schur(sys.argv[1:]))


if __name__ == "__main__":
    main_super_schur()
