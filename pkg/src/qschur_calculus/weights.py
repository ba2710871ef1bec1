"""gl_n and sl_n weight combinatorics."""

from collections.abc import Iterator
from functools import cache
from itertools import accumulate
from math import comb
from typing import Final

import regex as re

from .errors import DomainError, ValidationError

Weight = tuple[int, ...]


class _Star:
    """Sentinel returned by ``phi`` when no integral gl weight exists."""

    _instance: "_Star | None" = None

    def __new__(cls) -> "_Star":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "STAR"

    def __reduce__(self) -> str:
        return "STAR"


STAR: Final = _Star()

WEIGHT_PATTERN = re.compile(r"^\s*\(?\s*(-?\d+(?:\s*,\s*-?\d+)*)?\s*,?\s*\)?\s*$")


def bar(lam: Weight) -> Weight:
    """sl weight of a gl weight: consecutive differences."""
    return tuple(lam[j] - lam[j + 1] for j in range(len(lam) - 1))


def bar_i(lam: Weight, i: int) -> int:
    return lam[i - 1] - lam[i]


def phi(mu: Weight, n: int, d: int) -> Weight | _Star:
    """
    The gl weight of size d lifting the sl weight ``mu``, or STAR.

    Solves lambda_j - lambda_{j+1} = mu_j with sum(lambda) = d.
    """
    if len(mu) != n - 1:
        raise DomainError(f"sl weight of length {len(mu)} for n={n}")
    weighted = sum((k + 1) * m for k, m in enumerate(mu))
    top, rem = divmod(d - weighted, n)
    if rem:
        return STAR
    tails = list(accumulate(reversed(mu)))[::-1]
    return tuple(top + t for t in tails) + (top,)


def in_lambda(lam: Weight, n: int, d: int) -> bool:
    return len(lam) == n and all(x >= 0 for x in lam) and sum(lam) == d


@cache
def _compositions(n: int, d: int) -> tuple[Weight, ...]:
    if n == 1:
        return ((d,),)
    return tuple(
        (first, *rest)
        for first in range(d, -1, -1)
        for rest in _compositions(n - 1, d - first)
    )


def enumerate_lambda(n: int, d: int) -> list[Weight]:
    """Lambda(n,d) in decreasing lexicographic order."""
    if n < 1 or d < 0:
        raise DomainError(f"need n >= 1 and d >= 0, got n={n}, d={d}")
    return list(_compositions(n, d))


def enumerate_dominant(n: int, d: int) -> list[Weight]:
    return [
        lam
        for lam in enumerate_lambda(n, d)
        if all(lam[j] >= lam[j + 1] for j in range(n - 1))
    ]


def lambda_size(n: int, d: int) -> int:
    return comb(n + d - 1, d)


def alpha(i: int, n: int) -> Weight:
    """Simple root alpha_i = eps_i - eps_{i+1}."""
    if not 1 <= i <= n - 1:
        raise DomainError(f"colour {i} outside 1..{n - 1}")
    return tuple(1 if j == i - 1 else -1 if j == i else 0 for j in range(n))


def shift(lam: Weight, i: int, sign: int) -> Weight:
    """lambda + sign * alpha_i; the result may leave Lambda(n,d)."""
    out = list(lam)
    out[i - 1] += sign
    out[i] -= sign
    return tuple(out)


def cartan(i: int, j: int) -> int:
    if i == j:
        return 2
    if abs(i - j) == 1:
        return -1
    return 0


def partial_sums(lam: Weight) -> Weight:
    """k_i = lambda_1 + ... + lambda_i."""
    return tuple(accumulate(lam))


def lex_key(lam: Weight) -> Weight:
    return tuple(lam)


def dominance_leq(mu: Weight, lam: Weight) -> bool:
    if sum(mu) != sum(lam):
        return False
    return all(a <= b for a, b in zip(partial_sums(mu), partial_sums(lam), strict=True))


def partitions(d: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[Weight]:
    """Partitions of d in decreasing lexicographic order, trailing zeros dropped."""
    if d == 0:
        yield ()
        return
    if max_parts == 0:
        return
    top = d if max_part is None else min(d, max_part)
    for first in range(top, 0, -1):
        rest_parts = None if max_parts is None else max_parts - 1
        for rest in partitions(d - first, rest_parts, first):
            yield (first, *rest)


def pad(lam: Weight, m: int) -> Weight:
    if m < len(lam):
        raise DomainError(f"cannot pad a weight of length {len(lam)} to {m}")
    return tuple(lam) + (0,) * (m - len(lam))


def parse_weight(text: str) -> Weight:
    """Reads ``(1,0,2)`` or ``1,0,2``."""
    match = WEIGHT_PATTERN.match(text)
    if not match:
        raise ValidationError(f"not a weight: {text!r}")
    body = match.group(1)
    if body is None:
        return ()
    return tuple(int(x) for x in re.split(r"\s*,\s*", body.strip()))


def format_weight(lam: Weight) -> str:
    return "(" + ",".join(str(x) for x in lam) + ")"
