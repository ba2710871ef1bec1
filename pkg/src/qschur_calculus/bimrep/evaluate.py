"""
The bimodule 2-representation: every generator acts on localised elements.

Positions are boundary positions in the section the atom reads from. For an
output path, ``x`` is the variable moved at the atom's first top letter and
``y`` the one moved at the second.
"""

import random
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from sympy.polys.rings import PolyElement

from ..diagrams.atoms import DOWN, UP, Atom
from ..diagrams.word import (
    DiagramSum,
    DiagramWord,
    as_sum,
    compose_v,
    degree,
    is_zero_by_label,
)
from ..errors import DomainError, ValidationError
from ..polysym import format_poly
from .bubbles import bubble_poly
from .section import BimElement, Path, Section, add, clean, equal, letter_strands, scale, section


def _ground(sec: Section, c: Fraction | int):
    c = Fraction(c)
    return sec.ring.domain(c.numerator, c.denominator)


def _swap_at(path: Path, p: int) -> Path:
    return (*path[:p], path[p + 1], path[p], *path[p + 2 :])


def _vandermonde(sec: Section, strand: tuple[int, ...]) -> PolyElement:
    out = sec.ring.one
    for j, a in enumerate(strand):
        for b in strand[j + 1 :]:
            out *= sec.z[a] - sec.z[b]
    return out


def _cap_sum(
    sec_out: Section, f: BimElement, path: Path, p: int, strand: tuple[int, ...], left_first: bool
) -> PolyElement:
    """
    sum_c f[..c,c..] / prod_{r != c} (z_c - z_r)   (left_first)
    sum_c f[..c,c..] / prod_{r != c} (z_r - z_c)   (otherwise)

    computed over the common Vandermonde denominator of ``strand``.
    """
    R = sec_out.ring
    zero = R.zero
    total = zero
    for k, c in enumerate(strand):
        value = f.get((*path[:p], c, c, *path[p:]), zero)
        if not value:
            continue
        rest = tuple(v for v in strand if v != c)
        coeff = _vandermonde(sec_out, rest)
        flips = k if left_first else len(strand) - 1 - k
        total += (-1) ** flips * coeff * value
    if not total:
        return zero
    return total.exquo(_vandermonde(sec_out, strand))


def _out_letters(sec: Section, atom: Atom, p: int):
    width = len(atom.bottom)
    if tuple(sec.letters[p : p + width]) != atom.bottom:
        raise ValidationError(f"{atom} does not fit the boundary at position {p}")
    return (*sec.letters[:p], *atom.top, *sec.letters[p + width :])


def eval_generator(
    atom: Atom, p: int, sec: Section, f: BimElement
) -> tuple[Section, BimElement]:
    """Applies one generator at boundary position ``p``."""
    kind = atom.kind
    if atom.is_identity:
        return sec, f
    out = section(sec.n, sec.d, sec.lam, _out_letters(sec, atom, p))
    z = out.z
    zero = out.ring.zero
    result: BimElement = {}

    for path in out.paths:
        if kind in ("dotU", "dotD"):
            value = z[path[p]] ** atom.dots * f.get(path, zero)

        elif kind == "bubble":
            strands = out.strands_at(path, p)
            value = bubble_poly(atom.clockwise, atom.dots, atom.colours[0], strands, out) * f.get(
                path, zero
            )

        elif kind in ("xUU", "xDD"):
            value = _crossing(kind, atom.colours, path, p, f, out)

        elif kind in ("xLR", "xRL"):
            value = _sideways(kind, atom.colours, path, p, f, out)

        elif kind in ("cupEF", "cupFE"):
            if path[p] != path[p + 1]:
                continue
            a = path[p]
            below = f.get((*path[:p], *path[p + 2 :]), zero)
            if not below:
                continue
            strands = out.strands_at(path, p)
            i = atom.colours[0]
            factor = out.ring.one
            if kind == "cupEF":
                for t in strands[i - 1]:
                    factor *= z[a] - z[t]
            else:
                for u in strands[i]:
                    factor *= z[u] - z[a]
            value = factor * below

        elif kind in ("capEF", "capFE"):
            strands = out.strands_at(path, p)
            i = atom.colours[0]
            if kind == "capEF":
                value = _cap_sum(out, f, path, p, strands[i], left_first=False)
            else:
                value = _cap_sum(out, f, path, p, strands[i - 1], left_first=True)

        else:
            raise DomainError(f"no bimodule map for {kind}")

        if value:
            result[path] = value
    return out, result


def _crossing(
    kind: str, colours: tuple[int, int], path: Path, p: int, f: BimElement, out: Section
) -> PolyElement:
    c1, c2 = colours
    z = out.z
    zero = out.ring.zero
    x, y = path[p], path[p + 1]
    swapped = f.get(_swap_at(path, p), zero)
    if c1 == c2:
        numerator = f.get(path, zero) - swapped
        if not numerator:
            return zero
        return numerator.exquo(z[x] - z[y] if kind == "xUU" else z[y] - z[x])
    if kind == "xUU" and c1 == c2 + 1:
        return (z[y] - z[x]) * swapped
    if kind == "xDD" and c2 == c1 + 1:
        return (z[x] - z[y]) * swapped
    return swapped


def _sideways(
    kind: str, colours: tuple[int, int], path: Path, p: int, f: BimElement, out: Section
) -> PolyElement:
    """
    Different colours only relabel: the value is read off the swapped path.
    For one colour, a path whose two letters move the same variable x takes

        sum_c f[..c,c..] prod_{t != c} (z_x - z_t) / (z_c - z_t)

    over the strand the first bottom letter takes its variable from.
    """
    zero = out.ring.zero
    x, y = path[p], path[p + 1]
    a, b = colours
    if a != b or x != y:
        return f.get(_swap_at(path, p), zero)

    z = out.z
    src, _ = letter_strands((a, UP if kind == "xLR" else DOWN))
    strand = out.strands_at(path, p)[src]
    total = zero
    for k, c in enumerate(strand):
        value = f.get((*path[:p], c, c, *path[p + 2 :]), zero)
        if not value:
            continue
        rest = tuple(t for t in strand if t != c)
        for t in rest:
            value *= z[x] - z[t]
        total += (-1) ** k * _vandermonde(out, rest) * value
    if not total:
        return zero
    return total.exquo(_vandermonde(out, strand))


def apply_word(w: DiagramWord, f: BimElement) -> BimElement:
    """The map of a single word, including its coefficient."""
    if is_zero_by_label(w):
        return {}
    sec = section(w.n, w.d, w.lam, w.bottom)
    for slc in w.slices:
        pos = 0
        for atom in slc:
            sec, f = eval_generator(atom, pos, sec, f)
            pos += len(atom.top)
        if not f:
            return {}
    return scale(f, _ground(sec, w.coeff)) if w.coeff != 1 else f


@dataclass(frozen=True)
class BimMap:
    """The image of a diagram sum: a map between two localised bimodules."""

    source: Section
    target: Section
    terms: tuple[DiagramWord, ...]

    @cached_property
    def degree(self) -> int | None:
        degrees = {degree(t) for t in self.terms}
        return degrees.pop() if len(degrees) == 1 else None

    def __call__(self, f: BimElement) -> BimElement:
        out: BimElement = {}
        for term in self.terms:
            out = add(out, apply_word(term, f))
        return out

    @cached_property
    def images(self) -> tuple[BimElement, ...]:
        return tuple(self(b) for _, b in self.source.basis)

    @property
    def is_zero(self) -> bool:
        return not any(self.images)

    def compose(self, lower: "BimMap") -> "BimMap":
        """``self`` after ``lower``."""
        if self.source != lower.target:
            raise ValidationError("maps are not composable")
        terms = tuple(compose_v(u, lo) for u in self.terms for lo in lower.terms)
        return BimMap(lower.source, self.target, terms)


def eval_diagram(w: DiagramWord) -> BimMap:
    return eval_sum(DiagramSum.of(w))


def eval_sum(s: DiagramSum | DiagramWord) -> BimMap:
    s = as_sum(s)
    source = section(s.n, s.d, tuple(s.lam), tuple(s.bottom))
    target = section(s.n, s.d, tuple(s.lam), tuple(s.top))
    return BimMap(source, target, s.terms)


def _point_value(elem: BimElement, point: tuple) -> dict[Path, object]:
    values = {path: value(*point) for path, value in elem.items()}
    return {path: v for path, v in values.items() if v != 0}


def first_difference(f: BimMap, g: BimMap, panel_size: int = 3, seed: int = 0) -> str | None:
    """
    None when the two maps agree on the whole source basis and on a seeded
    panel of random combinations evaluated at random rational points; otherwise
    a description of the first disagreement.
    """
    if f.source != g.source or f.target != g.target:
        raise ValidationError("maps have different source or target")
    for (exponents, _), a, b in zip(f.source.basis, f.images, g.images, strict=True):
        if not equal(a, b):
            diff = clean(add(a, scale(b, -1)))
            path, value = next(iter(diff.items()))
            return f"basis {exponents}, path {path}: difference {format_poly(value)}"

    basis = f.source.basis
    if not basis:
        return None
    rng = random.Random(seed)
    domain = f.source.ring.domain
    for k in range(panel_size):
        combo: BimElement = {}
        for _, b in basis:
            combo = add(combo, scale(b, rng.randint(-3, 3)))
        point = tuple(domain(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(f.source.d))
        if _point_value(f(combo), point) != _point_value(g(combo), point):
            return f"random panel {k} disagrees at {point}"
    return None


def maps_equal(f: BimMap, g: BimMap, panel_size: int = 3, seed: int = 0) -> bool:
    return first_difference(f, g, panel_size, seed) is None


def sums_differ(
    lhs: DiagramSum | DiagramWord, rhs: DiagramSum | DiagramWord, panel_size: int = 3, seed: int = 0
) -> str | None:
    """first_difference of the two evaluated sides."""
    return first_difference(eval_sum(lhs), eval_sum(rhs), panel_size, seed)


def describe_map(m: BimMap) -> Iterable[str]:
    """Lines listing the image of every basis element of the source."""
    for (exponents, _), image in zip(m.source.basis, m.images, strict=True):
        body = ", ".join(f"{path}: {format_poly(value)}" for path, value in sorted(image.items()))
        yield f"{exponents} -> {{{body}}}"


