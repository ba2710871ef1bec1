"""Soergel diagrams: coloured graphs built from dots, trivalent, 4- and 6-valent vertices."""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any

from ..errors import CompositionError, DomainError, ValidationError

# Each rule lists, by argument index, the colours an atom consumes at its bottom
# and produces at its top, left to right.
SOERGEL_ATOM_TABLE: dict[str, dict[str, Any]] = {
    "line": {"arity": 1, "bottom": (0,), "top": (0,), "degree": 0},
    "startDot": {"arity": 1, "bottom": (), "top": (0,), "degree": 1},
    "endDot": {"arity": 1, "bottom": (0,), "top": (), "degree": 1},
    "merge": {"arity": 1, "bottom": (0, 0), "top": (0,), "degree": -1},
    "split": {"arity": 1, "bottom": (0,), "top": (0, 0), "degree": -1},
    "four": {"arity": 2, "bottom": (0, 1), "top": (1, 0), "degree": 0},
    "six": {"arity": 2, "bottom": (0, 1, 0), "top": (1, 0, 1), "degree": 0},
    "box": {"arity": 1, "bottom": (), "top": (), "degree": 2},
}


@dataclass(frozen=True)
class SoergelAtom:
    kind: str
    colours: tuple[int, ...]

    def __post_init__(self) -> None:
        rule = SOERGEL_ATOM_TABLE.get(self.kind)
        if rule is None:
            raise ValidationError(f"unknown Soergel atom {self.kind!r}")
        if len(self.colours) != rule["arity"]:
            raise ValidationError(f"{self.kind} takes {rule['arity']} colour(s)")
        if self.kind == "four" and abs(self.colours[0] - self.colours[1]) <= 1:
            raise ValidationError(f"four{self.colours} needs distant colours")
        if self.kind == "six" and abs(self.colours[0] - self.colours[1]) != 1:
            raise ValidationError(f"six{self.colours} needs adjacent colours")

    @property
    def bottom(self) -> tuple[int, ...]:
        return tuple(self.colours[k] for k in SOERGEL_ATOM_TABLE[self.kind]["bottom"])

    @property
    def top(self) -> tuple[int, ...]:
        return tuple(self.colours[k] for k in SOERGEL_ATOM_TABLE[self.kind]["top"])

    @property
    def degree(self) -> int:
        return SOERGEL_ATOM_TABLE[self.kind]["degree"]

    def __str__(self) -> str:
        return f"{self.kind}({','.join(str(c) for c in self.colours)})"


def line(i: int) -> SoergelAtom:
    return SoergelAtom("line", (i,))


def start_dot(i: int) -> SoergelAtom:
    return SoergelAtom("startDot", (i,))


def end_dot(i: int) -> SoergelAtom:
    return SoergelAtom("endDot", (i,))


def merge(i: int) -> SoergelAtom:
    return SoergelAtom("merge", (i,))


def split(i: int) -> SoergelAtom:
    return SoergelAtom("split", (i,))


def four(a: int, b: int) -> SoergelAtom:
    return SoergelAtom("four", (a, b))


def six(a: int, b: int) -> SoergelAtom:
    return SoergelAtom("six", (a, b))


def box(i: int) -> SoergelAtom:
    return SoergelAtom("box", (i,))


SoergelSlice = tuple[SoergelAtom, ...]
SoergelStep = tuple[SoergelAtom, int]


def max_colour(n: int, d: int) -> int:
    """Largest strand colour: n-1 without boxes, d-1 once boxes are in play."""
    return n - 1 if d == n else d - 1


@dataclass(frozen=True)
class SoergelWord:
    """
    A Soergel diagram read bottom to top. With d == n the word lives in the
    category without boxes; d < n admits boxes numbered 1..d.
    """

    n: int
    d: int
    bottom: tuple[int, ...]
    slices: tuple[SoergelSlice, ...] = ()
    coeff: Fraction | int = 1

    def __post_init__(self) -> None:
        if not 1 <= self.d <= self.n:
            raise DomainError(f"need 1 <= d <= n, got n={self.n}, d={self.d}")
        top_colour = max_colour(self.n, self.d)
        for c in self.bottom:
            if not 1 <= c <= top_colour:
                raise ValidationError(f"colour {c} outside 1..{top_colour}")
        for slc in self.slices:
            for atom in slc:
                if atom.kind == "box":
                    if self.d == self.n:
                        raise DomainError("boxes only exist when d < n")
                    if not 1 <= atom.colours[0] <= self.d:
                        raise ValidationError(f"box {atom.colours[0]} outside 1..{self.d}")
                    continue
                for c in atom.colours:
                    if not 1 <= c <= top_colour:
                        raise ValidationError(f"colour {c} outside 1..{top_colour} in {atom}")
        self.boundaries  # noqa: B018

    @classmethod
    def identity(cls, n: int, d: int, bottom: Iterable[int]) -> "SoergelWord":
        return cls(n, d, tuple(bottom))

    @cached_property
    def boundaries(self) -> tuple[tuple[int, ...], ...]:
        current = tuple(self.bottom)
        levels = [current]
        for s, slc in enumerate(self.slices):
            pos = 0
            top: list[int] = []
            for atom in slc:
                width = len(atom.bottom)
                if tuple(current[pos : pos + width]) != atom.bottom:
                    raise ValidationError(f"slice {s}: {atom} does not fit at position {pos}")
                top.extend(atom.top)
                pos += width
            if pos != len(current):
                raise ValidationError(f"slice {s} covers {pos} of {len(current)} strands")
            current = tuple(top)
            levels.append(current)
        return tuple(levels)

    @property
    def top(self) -> tuple[int, ...]:
        return self.boundaries[-1]

    @property
    def degree(self) -> int:
        return sum(atom.degree for slc in self.slices for atom in slc)

    def scaled(self, c: Fraction | int) -> "SoergelWord":
        return SoergelWord(self.n, self.d, self.bottom, self.slices, self.coeff * c)

    def __str__(self) -> str:
        from .textio import format_soergel_word

        return format_soergel_word(self)


def _fill_slice(boundary: Sequence[int], steps: Iterable[SoergelStep]) -> SoergelSlice:
    """Places atoms at strand positions and fills the gaps with lines."""
    by_pos: dict[int, list[SoergelAtom]] = {}
    for atom, pos in steps:
        if not 0 <= pos <= len(boundary):
            raise ValidationError(f"position {pos} outside a boundary of {len(boundary)} strands")
        by_pos.setdefault(pos, []).append(atom)
    out: list[SoergelAtom] = []
    pos = 0
    while pos <= len(boundary):
        placed = by_pos.pop(pos, [])
        consuming = [a for a in placed if a.bottom]
        out.extend(a for a in placed if not a.bottom)
        if len(consuming) > 1:
            raise ValidationError(f"two atoms start at position {pos}")
        if consuming:
            out.append(consuming[0])
            pos += len(consuming[0].bottom)
            continue
        if pos < len(boundary):
            out.append(line(boundary[pos]))
        pos += 1
    if by_pos:
        raise ValidationError(f"atoms at positions {sorted(by_pos)} overlap another atom")
    return tuple(out)


def build_soergel(
    n: int,
    d: int,
    bottom: Iterable[int],
    steps: Iterable[Iterable[SoergelStep]],
    coeff: Fraction | int = 1,
) -> SoergelWord:
    """
    A word from sparse slices of (atom, position) pairs; start dots and boxes
    go in before the strand at their position.
    """
    word = SoergelWord(n, d, tuple(bottom), (), coeff)
    for step in steps:
        slc = _fill_slice(word.top, step)
        word = SoergelWord(n, d, word.bottom, (*word.slices, slc), coeff)
    return word


def compose_soergel(upper: SoergelWord, lower: SoergelWord) -> SoergelWord:
    """``upper`` stacked on ``lower``."""
    if (upper.n, upper.d) != (lower.n, lower.d):
        raise CompositionError("words live in different categories")
    if upper.bottom != lower.top:
        position = next(
            (k for k, (a, b) in enumerate(zip(upper.bottom, lower.top)) if a != b),
            min(len(upper.bottom), len(lower.top)),
        )
        raise CompositionError(f"boundaries differ at position {position}", position)
    return SoergelWord(
        lower.n, lower.d, lower.bottom, lower.slices + upper.slices, upper.coeff * lower.coeff
    )


def tensor(left: SoergelWord, right: SoergelWord) -> SoergelWord:
    """Side by side; the shorter word is padded with lines."""
    if (left.n, left.d) != (right.n, right.d):
        raise CompositionError("words live in different categories")
    height = max(len(left.slices), len(right.slices))

    def padded(w: SoergelWord) -> list[SoergelSlice]:
        fill = tuple(line(c) for c in w.top)
        return list(w.slices) + [fill] * (height - len(w.slices))

    slices = tuple(a + b for a, b in zip(padded(left), padded(right), strict=True))
    return SoergelWord(
        left.n, left.d, left.bottom + right.bottom, tuple(s for s in slices if s), left.coeff * right.coeff
    )


@dataclass(frozen=True)
class SoergelSum:
    """A rational linear combination of parallel Soergel words."""

    n: int
    d: int
    bottom: tuple[int, ...]
    top: tuple[int, ...]
    terms: tuple[SoergelWord, ...] = ()

    def __post_init__(self) -> None:
        for term in self.terms:
            if (term.n, term.d) != (self.n, self.d):
                raise ValidationError("terms of a sum must share n and d")
            if term.bottom != tuple(self.bottom) or term.top != tuple(self.top):
                raise ValidationError(f"term with boundary {term.bottom} -> {term.top} is not parallel")

    @classmethod
    def of(cls, *words: SoergelWord) -> "SoergelSum":
        if not words:
            raise DomainError("an empty sum needs explicit boundaries; use SoergelSum.zero")
        w = words[0]
        return cls(w.n, w.d, w.bottom, w.top, tuple(words))

    @classmethod
    def zero(cls, like: "SoergelWord | SoergelSum") -> "SoergelSum":
        return cls(like.n, like.d, like.bottom, like.top, ())

    def _parallel(self, terms: Iterable[SoergelWord]) -> "SoergelSum":
        return SoergelSum(self.n, self.d, self.bottom, self.top, tuple(terms))

    def __add__(self, other: "SoergelSum | SoergelWord") -> "SoergelSum":
        extra = (other,) if isinstance(other, SoergelWord) else other.terms
        return self._parallel(self.terms + extra)

    def scaled(self, c: Fraction | int) -> "SoergelSum":
        return self._parallel(t.scaled(c) for t in self.terms)

    def __neg__(self) -> "SoergelSum":
        return self.scaled(-1)

    def __sub__(self, other: "SoergelSum | SoergelWord") -> "SoergelSum":
        other = SoergelSum.of(other) if isinstance(other, SoergelWord) else other
        return self + (-other)

    def degrees(self) -> set[int]:
        return {t.degree for t in self.terms}


def as_soergel_sum(x: SoergelWord | SoergelSum) -> SoergelSum:
    return SoergelSum.of(x) if isinstance(x, SoergelWord) else x
