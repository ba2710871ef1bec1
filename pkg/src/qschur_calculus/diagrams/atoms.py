"""Generating 2-morphisms: strands, crossings, cups, caps and formal bubbles."""

from dataclasses import dataclass
from typing import Any

from ..errors import DomainError, ValidationError
from ..weights import Weight, alpha, bar_i, cartan

# A boundary letter (colour, sign): (i, +1) is an E_i strand, (i, -1) an F_i strand.
Letter = tuple[int, int]

UP, DOWN = 1, -1

# Each rule lists (argument index, sign) for the letters an atom consumes at its
# bottom and produces at its top, left to right.
ATOM_TABLE: dict[str, dict[str, Any]] = {
    "U": {"arity": 1, "bottom": ((0, UP),), "top": ((0, UP),)},
    "D": {"arity": 1, "bottom": ((0, DOWN),), "top": ((0, DOWN),)},
    "dotU": {"arity": 1, "bottom": ((0, UP),), "top": ((0, UP),)},
    "dotD": {"arity": 1, "bottom": ((0, DOWN),), "top": ((0, DOWN),)},
    "xUU": {"arity": 2, "bottom": ((0, UP), (1, UP)), "top": ((1, UP), (0, UP))},
    "xDD": {"arity": 2, "bottom": ((0, DOWN), (1, DOWN)), "top": ((1, DOWN), (0, DOWN))},
    "xLR": {"arity": 2, "bottom": ((0, UP), (1, DOWN)), "top": ((1, DOWN), (0, UP))},
    "xRL": {"arity": 2, "bottom": ((0, DOWN), (1, UP)), "top": ((1, UP), (0, DOWN))},
    "cupEF": {"arity": 1, "bottom": (), "top": ((0, DOWN), (0, UP))},
    "cupFE": {"arity": 1, "bottom": (), "top": ((0, UP), (0, DOWN))},
    "capEF": {"arity": 1, "bottom": ((0, DOWN), (0, UP)), "top": ()},
    "capFE": {"arity": 1, "bottom": ((0, UP), (0, DOWN)), "top": ()},
    "bubble": {"arity": 1, "bottom": (), "top": ()},
}

ROTATED_KIND = {
    "U": "D",
    "D": "U",
    "dotU": "dotD",
    "dotD": "dotU",
    "xUU": "xDD",
    "xDD": "xUU",
    "xLR": "xRL",
    "xRL": "xLR",
    "cupEF": "capEF",
    "capEF": "cupEF",
    "cupFE": "capFE",
    "capFE": "cupFE",
    "bubble": "bubble",
}

IDENTITY_KINDS = frozenset({"U", "D"})
STRAND_KINDS = frozenset({"U", "D", "dotU", "dotD"})
CROSSING_KINDS = frozenset({"xUU", "xDD", "xLR", "xRL"})


@dataclass(frozen=True)
class Atom:
    """
    One generator in a slice.

    ``dots`` is the dot count of a dotted strand and the (possibly negative)
    label of a formal bubble; ``clockwise`` only matters for bubbles.
    """

    kind: str
    colours: tuple[int, ...]
    dots: int = 0
    clockwise: bool = False

    def __post_init__(self) -> None:
        rule = ATOM_TABLE.get(self.kind)
        if rule is None:
            raise ValidationError(f"unknown atom kind {self.kind!r}")
        if len(self.colours) != rule["arity"]:
            raise ValidationError(f"{self.kind} takes {rule['arity']} colour(s)")
        if self.kind in ("dotU", "dotD") and self.dots < 0:
            raise ValidationError("a strand cannot carry a negative number of dots")

    @property
    def bottom(self) -> tuple[Letter, ...]:
        return tuple((self.colours[k], s) for k, s in ATOM_TABLE[self.kind]["bottom"])

    @property
    def top(self) -> tuple[Letter, ...]:
        return tuple((self.colours[k], s) for k, s in ATOM_TABLE[self.kind]["top"])

    @property
    def is_identity(self) -> bool:
        return self.kind in IDENTITY_KINDS

    def check_colours(self, n: int) -> None:
        for c in self.colours:
            if not 1 <= c <= n - 1:
                raise ValidationError(f"colour {c} outside 1..{n - 1} in {self}")

    def rotated(self) -> "Atom":
        """The atom turned by 180 degrees."""
        return Atom(ROTATED_KIND[self.kind], self.colours, self.dots, self.clockwise)

    def __str__(self) -> str:
        if self.kind in ("dotU", "dotD"):
            return f"{self.kind}({self.colours[0]},{self.dots})"
        if self.kind == "bubble":
            orientation = "cw" if self.clockwise else "ccw"
            return f"bubble({self.colours[0]},{self.dots},{orientation})"
        return f"{self.kind}({','.join(str(c) for c in self.colours)})"


def id_up(i: int) -> Atom:
    return Atom("U", (i,))


def id_down(i: int) -> Atom:
    return Atom("D", (i,))


def identity_for(letter: Letter) -> Atom:
    colour, sign = letter
    return id_up(colour) if sign == UP else id_down(colour)


def dot_up(i: int, r: int = 1) -> Atom:
    return Atom("dotU", (i,), r) if r else id_up(i)


def dot_down(i: int, r: int = 1) -> Atom:
    return Atom("dotD", (i,), r) if r else id_down(i)


def cross_uu(a: int, b: int) -> Atom:
    return Atom("xUU", (a, b))


def cross_dd(a: int, b: int) -> Atom:
    return Atom("xDD", (a, b))


def cross_lr(a: int, b: int) -> Atom:
    return Atom("xLR", (a, b))


def cross_rl(a: int, b: int) -> Atom:
    return Atom("xRL", (a, b))


def cup_ef(i: int) -> Atom:
    return Atom("cupEF", (i,))


def cup_fe(i: int) -> Atom:
    return Atom("cupFE", (i,))


def cap_ef(i: int) -> Atom:
    return Atom("capEF", (i,))


def cap_fe(i: int) -> Atom:
    return Atom("capFE", (i,))


def bubble(i: int, r: int, clockwise: bool) -> Atom:
    return Atom("bubble", (i,), r, clockwise)


def letter_weight(letters: tuple[Letter, ...] | list[Letter], n: int) -> Weight:
    """Signed sum of the simple roots of a letter sequence."""
    total = [0] * n
    for colour, sign in letters:
        for k, v in enumerate(alpha(colour, n)):
            total[k] += sign * v
    return tuple(total)


def add_weights(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def bubble_degree(clockwise: bool, r: int, lam_bar: int) -> int:
    return 2 * (r - lam_bar + 1) if clockwise else 2 * (r + lam_bar + 1)


def bubble_interior(atom: Atom, outside: Weight) -> Weight:
    """Clockwise bubbles enclose outside - alpha_i, counterclockwise ones outside + alpha_i."""
    n = len(outside)
    step = alpha(atom.colours[0], n)
    sign = -1 if atom.clockwise else 1
    return tuple(x + sign * s for x, s in zip(outside, step, strict=True))


def atom_degree(atom: Atom, right: Weight) -> int:
    """Degree of an atom whose right-hand region is labelled ``right``."""
    kind = atom.kind
    if kind in STRAND_KINDS:
        return 2 * atom.dots if kind in ("dotU", "dotD") else 0
    if kind in ("xUU", "xDD"):
        return -cartan(*atom.colours)
    if kind in ("xLR", "xRL"):
        return 0
    lam_bar = bar_i(right, atom.colours[0])
    if kind in ("cupEF", "capEF"):
        return 1 + lam_bar
    if kind in ("cupFE", "capFE"):
        return 1 - lam_bar
    if kind == "bubble":
        return bubble_degree(atom.clockwise, atom.dots, lam_bar)
    raise DomainError(f"no degree rule for {kind}")
