"""
Diagram words: vertical stacks of generator slices with a fixed right-hand region.

A word is read bottom to top. Every slice covers the whole boundary below it,
so the boundary at each level and the label of every region follow from the
bottom boundary and the rightmost region ``lam``.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from ..errors import CompositionError, DomainError, ValidationError
from ..weights import Weight, in_lambda
from .atoms import (
    DOWN,
    STRAND_KINDS,
    UP,
    Atom,
    Letter,
    add_weights,
    atom_degree,
    bubble_degree,
    bubble_interior,
    cap_ef,
    cap_fe,
    cross_dd,
    cross_uu,
    cup_ef,
    cup_fe,
    dot_down,
    dot_up,
    identity_for,
    letter_weight,
)

Slice = tuple[Atom, ...]
Step = tuple[Atom, int]


def _letter_str(letter: Letter) -> str:
    colour, sign = letter
    return f"{'+' if sign == UP else '-'}{colour}"


@dataclass(frozen=True)
class OneMorphism:
    """E_{s1 i1} ... E_{sm im} 1_source {shift}."""

    letters: tuple[Letter, ...]
    source: Weight
    shift: int = 0

    @property
    def target(self) -> Weight:
        return add_weights(self.source, letter_weight(self.letters, len(self.source)))

    def prefix_weights(self) -> list[Weight]:
        """Region labels from the source outwards, one per letter crossed."""
        current = self.source
        out = [current]
        for letter in reversed(self.letters):
            current = add_weights(current, letter_weight((letter,), len(current)))
            out.append(current)
        return out

    def is_zero_in(self, d: int) -> bool:
        n = len(self.source)
        return any(not in_lambda(w, n, d) for w in self.prefix_weights())

    def __str__(self) -> str:
        body = "".join(f"E{_letter_str(letter)}" for letter in self.letters)
        return f"{body}1_{self.source}{{{self.shift}}}"


@dataclass(frozen=True)
class DiagramWord:
    n: int
    d: int
    lam: Weight
    bottom: tuple[Letter, ...]
    slices: tuple[Slice, ...] = ()
    shift: int = 0
    coeff: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", tuple(self.lam))
        object.__setattr__(self, "bottom", tuple(tuple(x) for x in self.bottom))
        object.__setattr__(self, "slices", tuple(tuple(s) for s in self.slices))
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if len(self.lam) != self.n:
            raise ValidationError(f"weight {self.lam} has length {len(self.lam)}, expected n={self.n}")
        for colour, sign in self.bottom:
            if not 1 <= colour <= self.n - 1 or sign not in (UP, DOWN):
                raise ValidationError(f"bad boundary letter ({colour}, {sign})")
        self.boundaries  # noqa: B018

    @classmethod
    def identity(cls, n: int, d: int, lam: Weight, letters: Iterable[Letter], shift: int = 0) -> "DiagramWord":
        return cls(n, d, tuple(lam), tuple(letters), (), shift)

    @cached_property
    def boundaries(self) -> tuple[tuple[Letter, ...], ...]:
        """The boundary below the first slice, then above each slice."""
        levels = [self.bottom]
        current = self.bottom
        for s, slc in enumerate(self.slices):
            if not slc:
                raise ValidationError(f"slice {s} is empty")
            pos = 0
            top: list[Letter] = []
            for atom in slc:
                atom.check_colours(self.n)
                width = len(atom.bottom)
                if current[pos : pos + width] != atom.bottom:
                    raise ValidationError(
                        f"slice {s}: {atom} does not fit the boundary at position {pos}"
                    )
                top.extend(atom.top)
                pos += width
            if pos != len(current):
                raise ValidationError(f"slice {s} covers {pos} of {len(current)} strands")
            current = tuple(top)
            levels.append(current)
        return tuple(levels)

    @property
    def top(self) -> tuple[Letter, ...]:
        return self.boundaries[-1]

    @property
    def source(self) -> OneMorphism:
        return OneMorphism(self.bottom, self.lam, self.shift)

    @property
    def target(self) -> OneMorphism:
        return OneMorphism(self.top, self.lam, self.shift + degree(self))

    @property
    def left_region(self) -> Weight:
        return add_weights(self.lam, letter_weight(self.bottom, self.n))

    def level_regions(self, level: int) -> tuple[Weight, ...]:
        """Region labels at one level; entry j lies left of letter j, the last is ``lam``."""
        letters = self.boundaries[level]
        regions = [self.lam]
        current = self.lam
        for letter in reversed(letters):
            current = add_weights(current, letter_weight((letter,), self.n))
            regions.append(current)
        return tuple(reversed(regions))

    def placed_atoms(self) -> list[list[tuple[Atom, int, Weight]]]:
        """Per slice: (atom, bottom position, label of the region to its right)."""
        out = []
        for s, slc in enumerate(self.slices):
            regions = self.level_regions(s)
            pos = 0
            row = []
            for atom in slc:
                width = len(atom.bottom)
                row.append((atom, pos, regions[pos + width]))
                pos += width
            out.append(row)
        return out

    def scaled(self, c: Fraction | int) -> "DiagramWord":
        return DiagramWord(self.n, self.d, self.lam, self.bottom, self.slices, self.shift, self.coeff * c)

    def with_slices(self, slices: Iterable[Slice]) -> "DiagramWord":
        return DiagramWord(self.n, self.d, self.lam, self.bottom, tuple(slices), self.shift, self.coeff)

    def __str__(self) -> str:
        from .textio import format_word

        return format_word(self)


def _fill_slice(boundary: Sequence[Letter], steps: Iterable[Step]) -> Slice:
    """Places atoms at bottom positions and fills the rest with identity strands."""
    by_pos: dict[int, list[Atom]] = {}
    for atom, pos in steps:
        if not 0 <= pos <= len(boundary):
            raise ValidationError(f"position {pos} outside a boundary of {len(boundary)} letters")
        by_pos.setdefault(pos, []).append(atom)
    out: list[Atom] = []
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
            out.append(identity_for(boundary[pos]))
        pos += 1
    if by_pos:
        raise ValidationError(f"atoms at positions {sorted(by_pos)} overlap another atom")
    return tuple(out)


def build_word(
    n: int,
    d: int,
    lam: Weight,
    bottom: Iterable[Letter],
    steps: Iterable[Iterable[Step]],
    shift: int = 0,
    coeff: Fraction | int = 1,
) -> DiagramWord:
    """
    A word from sparse slices: each step lists (atom, position) pairs in the
    boundary below it. Cups and bubbles are inserted before the letter at their
    position.
    """
    word = DiagramWord(n, d, tuple(lam), tuple(bottom), (), shift, coeff)
    for step in steps:
        slc = _fill_slice(word.top, step)
        word = DiagramWord(n, d, word.lam, word.bottom, (*word.slices, slc), shift, coeff)
    return word


def extend_word(word: DiagramWord, steps: Iterable[Iterable[Step]]) -> DiagramWord:
    """Stacks more sparse slices on top of an existing word."""
    top = build_word(word.n, word.d, word.lam, word.top, steps)
    return compose_v(top, word)


def degree(w: DiagramWord) -> int:
    return sum(atom_degree(atom, right) for row in w.placed_atoms() for atom, _, right in row)


def regions(w: DiagramWord) -> list[tuple[Weight, ...]]:
    """Region labels at every level, bottom to top."""
    return [w.level_regions(level) for level in range(len(w.boundaries))]


def is_zero_by_label(w: DiagramWord) -> bool:
    """
    Zero in the quotient: some region leaves Lambda(n,d), a real formal bubble
    has its interior outside Lambda(n,d), or a real bubble has negative degree.
    """
    if not w.coeff:
        return True
    for labels in regions(w):
        if any(not in_lambda(r, w.n, w.d) for r in labels):
            return True
    for row in w.placed_atoms():
        for atom, _, right in row:
            if atom.kind != "bubble" or atom.dots < 0:
                continue
            if not in_lambda(bubble_interior(atom, right), w.n, w.d):
                return True
            if atom_degree(atom, right) < 0:
                return True
    return any(b.degree < 0 for b in find_bubbles(w))


@dataclass(frozen=True)
class LiteralBubble:
    colour: int
    clockwise: bool
    dots: int
    first_slice: int
    last_slice: int
    outside: Weight

    @property
    def degree(self) -> int:
        lam_bar = self.outside[self.colour - 1] - self.outside[self.colour]
        return bubble_degree(self.clockwise, self.dots, lam_bar)


def find_bubbles(w: DiagramWord) -> list[LiteralBubble]:
    """Closed loops made of a cup, dotted or plain strands and the matching cap."""
    placed = w.placed_atoms()
    found = []
    for s, row in enumerate(placed):
        top_pos = 0
        for atom, _, right in row:
            width = len(atom.top)
            if atom.kind in ("cupEF", "cupFE"):
                closing = "capFE" if atom.kind == "cupFE" else "capEF"
                hit = _follow_loop(placed, s + 1, top_pos, closing)
                if hit is not None:
                    last, dots = hit
                    found.append(
                        LiteralBubble(
                            atom.colours[0], atom.kind == "cupFE", dots, s, last, right
                        )
                    )
            top_pos += width
    return found


def _follow_loop(
    placed: list[list[tuple[Atom, int, Weight]]], start: int, left: int, closing: str
) -> tuple[int, int] | None:
    dots = 0
    for s in range(start, len(placed)):
        top_pos = 0
        next_left = None
        for atom, pos, _ in placed[s]:
            if not atom.bottom:
                if pos == left + 1:
                    return None
                continue
            if pos == left and atom.kind == closing:
                return s, dots
            if pos in (left, left + 1):
                if atom.kind not in STRAND_KINDS:
                    return None
                dots += atom.dots
                if pos == left:
                    next_left = top_pos
            top_pos += len(atom.top)
        if next_left is None:
            return None
        left = next_left
    return None


def rotate180(w: DiagramWord) -> DiagramWord:
    """Turns a word upside down and left to right; the grading shift changes sign."""
    bottom = tuple((c, -s) for c, s in reversed(w.top))
    slices = tuple(
        tuple(atom.rotated() for atom in reversed(slc)) for slc in reversed(w.slices)
    )
    return DiagramWord(w.n, w.d, w.left_region, bottom, slices, -w.shift, w.coeff)


def sl_sign_translate(w: DiagramWord) -> tuple[DiagramWord, int]:
    """Sign relating the gl and sl normalisations of the left cups and caps."""
    sign = 1
    for row in w.placed_atoms():
        for atom, _, right in row:
            below = right[atom.colours[0]] if atom.kind in ("cupFE", "capEF") else 0
            if atom.kind == "cupFE":
                sign *= (-1) ** (below + 1)
            elif atom.kind == "capEF":
                sign *= (-1) ** below
    return w, sign


def compose_v(upper: DiagramWord, lower: DiagramWord) -> DiagramWord:
    """``upper`` stacked on ``lower``."""
    if (upper.n, upper.d) != (lower.n, lower.d):
        raise CompositionError("words live in different 2-categories")
    if upper.lam != lower.lam:
        raise CompositionError(f"right regions differ: {lower.lam} below, {upper.lam} above")
    if upper.bottom != lower.top:
        position = next(
            (k for k, (a, b) in enumerate(zip(upper.bottom, lower.top)) if a != b),
            min(len(upper.bottom), len(lower.top)),
        )
        raise CompositionError(f"boundaries differ at position {position}", position)
    return DiagramWord(
        lower.n,
        lower.d,
        lower.lam,
        lower.bottom,
        lower.slices + upper.slices,
        lower.shift,
        upper.coeff * lower.coeff,
    )


def compose_h(left: DiagramWord, right: DiagramWord) -> DiagramWord:
    """``left`` placed beside ``right``; the shorter word is padded with identities."""
    if (left.n, left.d) != (right.n, right.d):
        raise CompositionError("words live in different 2-categories")
    if left.lam != right.left_region:
        raise CompositionError(
            f"region {right.left_region} left of the right word does not match {left.lam}",
            0,
        )
    height = max(len(left.slices), len(right.slices))

    def padded(w: DiagramWord) -> list[Slice]:
        fill = tuple(identity_for(letter) for letter in w.top)
        return list(w.slices) + [fill] * (height - len(w.slices))

    slices = [a + b for a, b in zip(padded(left), padded(right), strict=True)]
    return DiagramWord(
        right.n,
        right.d,
        right.lam,
        left.bottom + right.bottom,
        tuple(s for s in slices if s),
        left.shift + right.shift,
        left.coeff * right.coeff,
    )


@dataclass(frozen=True)
class DiagramSum:
    """A rational linear combination of parallel words."""

    n: int
    d: int
    lam: Weight
    bottom: tuple[Letter, ...]
    top: tuple[Letter, ...]
    terms: tuple[DiagramWord, ...] = ()

    def __post_init__(self) -> None:
        for term in self.terms:
            if (term.n, term.d, term.lam) != (self.n, self.d, tuple(self.lam)):
                raise ValidationError("terms of a sum must share n, d and the right region")
            if term.bottom != tuple(self.bottom) or term.top != tuple(self.top):
                raise ValidationError(f"term with boundary {term.bottom} -> {term.top} is not parallel")

    @classmethod
    def of(cls, *words: DiagramWord) -> "DiagramSum":
        if not words:
            raise DomainError("an empty sum needs explicit boundaries; use DiagramSum.zero")
        w = words[0]
        return cls(w.n, w.d, w.lam, w.bottom, w.top, tuple(words))

    @classmethod
    def zero(cls, like: DiagramWord) -> "DiagramSum":
        return cls(like.n, like.d, like.lam, like.bottom, like.top, ())

    def _parallel(self, terms: Iterable[DiagramWord]) -> "DiagramSum":
        return DiagramSum(self.n, self.d, self.lam, self.bottom, self.top, tuple(terms))

    def __add__(self, other: "DiagramSum | DiagramWord") -> "DiagramSum":
        extra = (other,) if isinstance(other, DiagramWord) else other.terms
        return self._parallel(self.terms + extra)

    def scaled(self, c: Fraction | int) -> "DiagramSum":
        return self._parallel(t.scaled(c) for t in self.terms)

    def __neg__(self) -> "DiagramSum":
        return self.scaled(-1)

    def __sub__(self, other: "DiagramSum | DiagramWord") -> "DiagramSum":
        other = DiagramSum.of(other) if isinstance(other, DiagramWord) else other
        return self + (-other)

    def degrees(self) -> set[int]:
        return {degree(t) for t in self.terms}


def as_sum(x: DiagramWord | DiagramSum) -> DiagramSum:
    return DiagramSum.of(x) if isinstance(x, DiagramWord) else x


def compose_sums(upper: DiagramWord | DiagramSum, lower: DiagramWord | DiagramSum) -> DiagramSum:
    """Bilinear vertical composition."""
    upper, lower = as_sum(upper), as_sum(lower)
    terms = tuple(compose_v(u, lo) for u in upper.terms for lo in lower.terms)
    return DiagramSum(lower.n, lower.d, lower.lam, lower.bottom, upper.top, terms)


def divided_power_idempotent(i: int, sign: int, m: int, lam: Weight, n: int, d: int) -> DiagramWord:
    """
    The longest-word crossing of m parallel i-strands followed by m-1, m-2, ..., 0
    dots on the top strands from the left; down strands carry the sign
    (-1)^{m(m-1)/2}.
    """
    if m < 1:
        raise DomainError(f"divided powers need m >= 1, got {m}")
    if sign not in (UP, DOWN):
        raise DomainError(f"sign must be +1 or -1, got {sign}")
    cross = cross_uu(i, i) if sign == UP else cross_dd(i, i)
    dot = dot_up if sign == UP else dot_down
    steps: list[list[Step]] = [
        [(cross, p)] for k in range(1, m) for p in range(k - 1, -1, -1)
    ]
    if m > 1:
        steps.append([(dot(i, m - 1 - p), p) for p in range(m - 1)])
    coeff = (-1) ** (m * (m - 1) // 2) if sign == DOWN else 1
    return build_word(n, d, lam, [(i, sign)] * m, steps, m * (1 - m) // 2, coeff)


def sideways_expansion(atom: Atom, pos: int, variant: int = 1) -> list[list[Step]]:
    """
    Cups, caps and a vertical crossing replacing a sideways crossing at ``pos``.

    Variant 1 twists the crossing with an up crossing, variant 2 with a down
    crossing.
    """
    a, b = atom.colours
    if atom.kind == "xLR":
        if variant == 1:
            return [[(cup_ef(b), pos)], [(cross_uu(b, a), pos + 1)], [(cap_fe(b), pos + 2)]]
        return [[(cup_ef(a), pos + 2)], [(cross_dd(b, a), pos + 1)], [(cap_fe(a), pos)]]
    if atom.kind == "xRL":
        if variant == 1:
            return [[(cup_fe(a), pos + 2)], [(cross_uu(b, a), pos + 1)], [(cap_ef(a), pos)]]
        return [[(cup_fe(b), pos)], [(cross_dd(b, a), pos + 1)], [(cap_ef(b), pos + 2)]]
    raise DomainError(f"{atom} is not a sideways crossing")
