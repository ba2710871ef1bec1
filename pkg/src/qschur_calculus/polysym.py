"""
Symmetric polynomials and divided differences over sympy polynomial rings.

Polynomials are sympy ``PolyElement`` values in a ``grlex`` ring over ``QQ``;
an ``Alphabet`` is an ordered tuple of generators of one ring.
"""

from collections.abc import Iterable
from dataclasses import dataclass
from functools import cache
from itertools import combinations, combinations_with_replacement

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing, ring

from .errors import DomainError
from .report import CheckResult, Report


@dataclass(frozen=True)
class Alphabet:
    """An ordered list of variables of one ring, with a role tag."""

    ring: PolyRing
    variables: tuple[PolyElement, ...]
    role: str = ""

    def __len__(self) -> int:
        return len(self.variables)

    def __iter__(self):
        return iter(self.variables)

    def __add__(self, other: "Alphabet") -> "Alphabet":
        if other.ring != self.ring:
            raise DomainError("alphabets live in different rings")
        if set(self.variables) & set(other.variables):
            raise DomainError("alphabets overlap")
        return Alphabet(self.ring, self.variables + other.variables, self.role)

    def without(self, var: PolyElement) -> "Alphabet":
        return Alphabet(self.ring, tuple(v for v in self.variables if v != var), self.role)

    def names(self) -> list[str]:
        return [str(v) for v in self.variables]


def polynomial_ring(**sizes: int) -> tuple[PolyRing, dict[str, Alphabet]]:
    """
    A ring with one alphabet per keyword, e.g. ``polynomial_ring(x=2, y=1)``
    gives variables x1, x2, y1.
    """
    names = [f"{key}{k}" for key, size in sizes.items() for k in range(1, size + 1)]
    if not names:
        names = ["_unit"]
    R, *gens = ring(names, QQ, grlex)
    alphabets: dict[str, Alphabet] = {}
    offset = 0
    for key, size in sizes.items():
        alphabets[key] = Alphabet(R, tuple(gens[offset : offset + size]), key)
        offset += size
    return R, alphabets


def empty_alphabet(R: PolyRing) -> Alphabet:
    return Alphabet(R, ())


@cache
def _elem_cached(k: int, ring_: PolyRing, variables: tuple[PolyElement, ...]) -> PolyElement:
    if k < 0 or k > len(variables):
        return ring_.zero
    total = ring_.zero
    for combo in combinations(variables, k):
        term = ring_.one
        for v in combo:
            term = term * v
        total = total + term
    return total


@cache
def _complete_cached(k: int, ring_: PolyRing, variables: tuple[PolyElement, ...]) -> PolyElement:
    if k < 0:
        return ring_.zero
    if k == 0:
        return ring_.one
    total = ring_.zero
    for combo in combinations_with_replacement(variables, k):
        term = ring_.one
        for v in combo:
            term = term * v
        total = total + term
    return total


def elem(k: int, A: Alphabet) -> PolyElement:
    """Elementary symmetric polynomial e_k(A); zero for k<0 or k>|A|."""
    return _elem_cached(k, A.ring, A.variables)


def complete(k: int, A: Alphabet) -> PolyElement:
    """Complete symmetric polynomial h_k(A); h_k of the empty alphabet is delta_{k,0}."""
    return _complete_cached(k, A.ring, A.variables)


def det(rows: list[list[PolyElement]], R: PolyRing) -> PolyElement:
    """Exact determinant of a square matrix of ring elements."""
    size = len(rows)
    if size == 0:
        return R.one
    return DomainMatrix(rows, (size, size), R.to_domain()).det()


def schur(alpha: Iterable[int], A: Alphabet) -> PolyElement:
    """Schur polynomial s_alpha(A) by the Jacobi-Trudi determinant det(h_{alpha_i-i+j})."""
    parts = [p for p in alpha if p]
    rows = [
        [complete(parts[i] - i + j, A) for j in range(len(parts))]
        for i in range(len(parts))
    ]
    return det(rows, A.ring)


def swap(p: PolyElement, x: PolyElement, y: PolyElement) -> PolyElement:
    """Exchange the variables x and y."""
    return p.compose([(x, y), (y, x)])


def is_symmetric_in(p: PolyElement, x: PolyElement, y: PolyElement) -> bool:
    return swap(p, x, y) == p


def divided_diff(p: PolyElement, x: PolyElement, y: PolyElement) -> PolyElement:
    """
    (p - p|x<->y) / (x - y).

    The division is always exact; sympy raises ExactQuotientFailed otherwise.
    """
    if x == y:
        raise DomainError("divided difference needs two distinct variables")
    numerator = p - swap(p, x, y)
    if not numerator:
        return p.ring.zero
    return numerator.exquo(x - y)


def divided_diff_chain(p: PolyElement, A: Alphabet, y: PolyElement, order: str = "left") -> PolyElement:
    """
    Iterated divided differences against an alphabet.

    ``left`` is d_{Ay} = d_{x1 y} d_{x2 y} ... d_{xa y} and ``right`` is
    d_{yA} = d_{y x1} ... d_{y xa}; the rightmost operator acts first.
    """
    if y in A.variables:
        raise DomainError("the single variable must not belong to the alphabet")
    if order not in ("left", "right"):
        raise DomainError(f"order must be 'left' or 'right', got {order!r}")
    result = p
    for x in reversed(A.variables):
        result = divided_diff(result, x, y) if order == "left" else divided_diff(result, y, x)
    return result


def format_poly(p: PolyElement) -> str:
    """Canonical text form, graded lexicographic from the leading term."""
    if not p:
        return "0"
    return _format_terms(p)


def _format_terms(p: PolyElement) -> str:
    names = [str(g) for g in p.ring.gens]
    pieces: list[tuple[str, str]] = []
    for monom, coeff in p.terms():
        factors = []
        for name, exp in zip(names, monom, strict=True):
            if exp == 1:
                factors.append(name)
            elif exp > 1:
                factors.append(f"{name}^{exp}")
        sign = "-" if coeff < 0 else "+"
        mag = -coeff if coeff < 0 else coeff
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = f"{mag}*" + "*".join(factors)
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in pieces[1:]:
        text += f" {sign} {body}"
    return text


def is_monomial_positive(p: PolyElement) -> bool:
    """All coefficients are non-negative integers."""
    return all(coeff >= 0 and coeff.denominator == 1 for _, coeff in p.terms())


def identity_oracles(max_size: int = 4, max_degree: int = 5) -> Report:
    """
    Checks the divided difference and symmetric function identities used by the
    bimodule calculus:

    - d_{yA}(y^N) = h_{N-|A|}(y, A);
    - sum_j (-1)^j e_j(A) h_{k-j}(A) = delta_{k,0};
    - e_l(U) = sum_j (-1)^j x^j e_{l-j}(T) where T = U + {x};
    - e_l(T) = e_l(U) + x e_{l-1}(U).
    """
    results: list[CheckResult] = []

    def record(case_id: str, relation: str, ok: bool, witness: str) -> None:
        results.append(
            CheckResult(
                case_id=case_id,
                relation_id=relation,
                status="pass" if ok else "fail",
                witness=None if ok else witness,
            )
        )

    for size in range(1, max_size + 1):
        _, alph = polynomial_ring(x=size, y=1)
        A, (y,) = alph["x"], alph["y"].variables
        yA = Alphabet(A.ring, (y, *A.variables))
        for N in range(size, max_degree + 1):
            lhs = divided_diff_chain(y**N, A, y, "right")
            rhs = complete(N - size, yA)
            record(f"chain-power/{size}/{N}", "chain-power", lhs == rhs, f"{format_poly(lhs)}")

    for size in range(0, max_size + 1):
        _, alph = polynomial_ring(x=size)
        A = alph["x"]
        for k in range(0, max_degree + 1):
            total = sum(
                ((-1) ** j * elem(j, A) * complete(k - j, A) for j in range(k + 1)),
                A.ring.zero,
            )
            expected = A.ring.one if k == 0 else A.ring.zero
            record(f"e-h-duality/{size}/{k}", "e-h-duality", total == expected, format_poly(total))

    for size in range(0, max_size):
        _, alph = polynomial_ring(u=size, x=1)
        U, (x,) = alph["u"], alph["x"].variables
        T = Alphabet(U.ring, (x, *U.variables))
        for k in range(0, size + 2):
            lhs = elem(k, U)
            rhs = sum(
                ((-1) ** j * x**j * elem(k - j, T) for j in range(k + 1)), U.ring.zero
            )
            record(f"remove-variable/{size}/{k}", "remove-variable", lhs == rhs, format_poly(lhs - rhs))
            lhs = elem(k, T)
            rhs = elem(k, U) + x * elem(k - 1, U)
            record(f"add-variable/{size}/{k}", "add-variable", lhs == rhs, format_poly(lhs - rhs))

    return Report("identity-oracles", tuple(results))
