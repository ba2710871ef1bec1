"""
The relation catalogue of the Soergel categories, checked through the functor
into S(n,d) and the bimodule evaluation.

Every relation is a pair of sides built from plain colour tuples, so cases can
be shipped to worker processes like the ones of the bimodule suite.
"""

from collections.abc import Callable, Iterator
from fractions import Fraction
from itertools import permutations
from typing import Any

from ..bimrep.evaluate import sums_differ
from ..diagrams.atoms import bubble, dot_down, dot_up
from ..diagrams.word import DiagramSum, DiagramWord, as_sum, build_word
from ..errors import DomainError
from ..runner import Case
from .sigma import base_weight, box_normalize, box_polynomial, box_ring, sigma, sigma_letters
from .words import (
    SoergelStep,
    SoergelSum,
    SoergelWord,
    box,
    build_soergel,
    end_dot,
    four,
    max_colour,
    merge,
    six,
    split,
    start_dot,
)

Side = SoergelWord | SoergelSum | DiagramWord | DiagramSum | None
Steps = list[list[SoergelStep]]


def _cup(i: int, p: int) -> Steps:
    return [[(start_dot(i), p)], [(split(i), p)]]


def _cap(i: int, p: int) -> Steps:
    return [[(merge(i), p)], [(end_dot(i), p)]]


def _barbell(i: int, p: int) -> Steps:
    return [[(start_dot(i), p)], [(end_dot(i), p)]]


def _one(*atoms: SoergelStep) -> Steps:
    """Each atom in a slice of its own."""
    return [[a] for a in atoms]


# -- isotopy -----------------------------------------------------------------


def adjunction_left(n: int, d: int, i: int):
    w = build_soergel(n, d, (i,), _cup(i, 1) + _cap(i, 0))
    return w, SoergelWord.identity(n, d, (i,))


def adjunction_right(n: int, d: int, i: int):
    w = build_soergel(n, d, (i,), _cup(i, 0) + _cap(i, 1))
    return w, SoergelWord.identity(n, d, (i,))


def dot_rotation_down(n: int, d: int, i: int):
    w = build_soergel(n, d, (i,), _one((start_dot(i), 1)) + _cap(i, 0))
    return w, build_soergel(n, d, (i,), _one((end_dot(i), 0)))


def dot_rotation_up(n: int, d: int, i: int):
    w = build_soergel(n, d, (), _cup(i, 0) + _one((end_dot(i), 1)))
    return w, build_soergel(n, d, (), _one((start_dot(i), 0)))


def trivalent_rotation_left(n: int, d: int, i: int):
    w = build_soergel(n, d, (i, i), _one((split(i), 1)) + _cap(i, 0))
    return w, build_soergel(n, d, (i, i), _one((merge(i), 0)))


def trivalent_rotation_right(n: int, d: int, i: int):
    w = build_soergel(n, d, (i, i), _one((split(i), 0)) + _cap(i, 1))
    return w, build_soergel(n, d, (i, i), _one((merge(i), 0)))


def four_rotation(n: int, d: int, a: int, b: int):
    w = build_soergel(n, d, (b, a), _cup(a, 0) + _one((four(a, b), 1)) + _cap(a, 2))
    return w, build_soergel(n, d, (b, a), _one((four(b, a), 0)))


def six_rotation(n: int, d: int, a: int, b: int):
    w = build_soergel(n, d, (b, a, b), _cup(a, 0) + _one((six(a, b), 1)) + _cap(b, 3))
    return w, build_soergel(n, d, (b, a, b), _one((six(b, a), 0)))


def barbell_rotation(n: int, d: int, i: int):
    w = build_soergel(n, d, (), _one((start_dot(i), 0), (start_dot(i), 1)) + _cap(i, 0))
    return w, build_soergel(n, d, (), _barbell(i, 0))


# -- one colour --------------------------------------------------------------


def lollipop(n: int, d: int, i: int):
    return build_soergel(n, d, (i,), _one((split(i), 0)) + _cap(i, 0)), None


def needle(n: int, d: int, i: int):
    return build_soergel(n, d, (i,), _one((split(i), 0), (merge(i), 0))), None


def barbell_forcing(n: int, d: int, i: int):
    lhs = SoergelSum.of(
        build_soergel(n, d, (i,), _barbell(i, 0)), build_soergel(n, d, (i,), _barbell(i, 1))
    )
    rhs = build_soergel(n, d, (i,), _one((end_dot(i), 0), (start_dot(i), 0)), coeff=2)
    return lhs, rhs


# -- two distant colours -----------------------------------------------------


def distant_r2(n: int, d: int, a: int, b: int):
    w = build_soergel(n, d, (a, b), _one((four(a, b), 0), (four(b, a), 0)))
    return w, SoergelWord.identity(n, d, (a, b))


def distant_dot_slide(n: int, d: int, a: int, b: int):
    w = build_soergel(n, d, (a, b), _one((four(a, b), 0), (end_dot(a), 1)))
    return w, build_soergel(n, d, (a, b), _one((end_dot(a), 0)))


def distant_trivalent_slide(n: int, d: int, a: int, b: int):
    lhs = build_soergel(n, d, (a, b), _one((four(a, b), 0), (split(a), 1)))
    rhs = build_soergel(n, d, (a, b), _one((split(a), 0), (four(a, b), 1), (four(a, b), 0)))
    return lhs, rhs


def distant_barbell_slide(n: int, d: int, a: int, b: int):
    return build_soergel(n, d, (b,), _barbell(a, 0)), build_soergel(n, d, (b,), _barbell(a, 1))


# -- two adjacent colours ----------------------------------------------------


def dot_six_top(n: int, d: int, a: int, b: int):
    lhs = build_soergel(n, d, (a, b, a), _one((six(a, b), 0), (end_dot(a), 1)))
    merged = build_soergel(n, d, (a, b, a), [[(end_dot(a), 0), (split(b), 1), (end_dot(a), 2)]])
    capcup = build_soergel(
        n, d, (a, b, a), _one((end_dot(b), 1)) + _cap(a, 0) + _cup(b, 0)
    )
    return lhs, SoergelSum.of(merged, capcup)


def dot_six_bottom(n: int, d: int, a: int, b: int):
    lhs = build_soergel(n, d, (a, a), _one((start_dot(b), 1), (six(a, b), 0)))
    merged = build_soergel(n, d, (a, a), [[(start_dot(b), 0), (merge(a), 0), (start_dot(b), 2)]])
    capcup = build_soergel(n, d, (a, a), _cap(a, 0) + _cup(b, 0) + _one((start_dot(a), 1)))
    return lhs, SoergelSum.of(merged, capcup)


def _broken_h(n: int, d: int, a: int, b: int, vertical: bool) -> SoergelWord:
    """The a-coloured H on (a, b, a) with the middle b strand broken by dots."""
    middle = _one((merge(a), 0), (split(a), 0)) if vertical else _one((split(a), 1), (merge(a), 0))
    return build_soergel(n, d, (a, b, a), _one((end_dot(b), 1)) + middle + _one((start_dot(b), 1)))


def six_r3(n: int, d: int, a: int, b: int):
    lhs = build_soergel(n, d, (a, b, a), _one((six(a, b), 0), (six(b, a), 0)))
    return lhs, SoergelSum.of(SoergelWord.identity(n, d, (a, b, a)), _broken_h(n, d, a, b, True))


def dumbbell_square(n: int, d: int, a: int, b: int):
    return _broken_h(n, d, a, b, True), _broken_h(n, d, a, b, False)


def adjacent_barbell_slide(n: int, d: int, i: int, j: int):
    lhs = SoergelSum.of(
        build_soergel(n, d, (i,), _barbell(j, 0)),
        build_soergel(n, d, (i,), _barbell(j, 1), coeff=-1),
    )
    rhs = SoergelSum.of(
        build_soergel(n, d, (i,), _barbell(i, 1)).scaled(Fraction(1, 2)),
        build_soergel(n, d, (i,), _barbell(i, 0)).scaled(Fraction(-1, 2)),
    )
    return lhs, rhs


# -- three colours -----------------------------------------------------------


def six_slide(n: int, d: int, a: int, b: int, c: int):
    lhs = build_soergel(
        n, d, (c, a, b, a), _one((four(c, a), 0), (four(c, b), 1), (four(c, a), 2), (six(a, b), 0))
    )
    rhs = build_soergel(
        n, d, (c, a, b, a), _one((six(a, b), 1), (four(c, b), 0), (four(c, a), 1), (four(c, b), 2))
    )
    return lhs, rhs


def four_slide(n: int, d: int, a: int, b: int, c: int):
    lhs = build_soergel(n, d, (c, a, b), _one((four(c, a), 0), (four(c, b), 1), (four(a, b), 0)))
    rhs = build_soergel(n, d, (c, a, b), _one((four(a, b), 1), (four(c, b), 0), (four(c, a), 1)))
    return lhs, rhs


def polynomial_forcing(n: int, d: int, i: int):
    lhs = SoergelSum(n, d, (i,), (i,))
    for j in (i - 1, i + 1):
        lhs = lhs + build_soergel(n, d, (i,), _barbell(j, 0))
        lhs = lhs + build_soergel(n, d, (i,), _barbell(j, 1), coeff=-1)
    rhs = SoergelSum.of(
        build_soergel(n, d, (i,), _barbell(i, 1)), build_soergel(n, d, (i,), _barbell(i, 0), coeff=-1)
    )
    return lhs, rhs


def _double_broken_h(n: int, d: int, i: int, vertical: bool) -> SoergelWord:
    """The i-coloured H on (i, i-1, i+1, i) with both middle strands broken."""
    bottom = (i, i - 1, i + 1, i)
    middle = _one((merge(i), 0), (split(i), 0)) if vertical else _one((split(i), 1), (merge(i), 0))
    ends = [[(end_dot(i - 1), 1), (end_dot(i + 1), 2)]]
    starts = [[(start_dot(i - 1), 1), (start_dot(i + 1), 1)]]
    return build_soergel(n, d, bottom, ends + middle + starts)


def double_dumbbell_square(n: int, d: int, i: int):
    return _double_broken_h(n, d, i, True), _double_broken_h(n, d, i, False)


# -- derived: dotted edges ---------------------------------------------------


def _pair_word(n: int, d: int, i: int, steps, coeff: int = 1) -> DiagramWord:
    return build_word(n, d, base_weight(n, d), sigma_letters((i,)), steps, coeff=coeff)


def edge_dots(n: int, d: int, i: int):
    lhs = build_soergel(n, d, (i,), _barbell(i, 1))
    rhs = DiagramSum.of(
        _pair_word(n, d, i, [[(dot_up(i), 1)]], coeff=2),
        _pair_word(n, d, i, [[(bubble(i, -2, False), 1)]], coeff=-1),
    )
    return lhs, rhs


def dots_edge(n: int, d: int, i: int):
    lhs = build_soergel(n, d, (i,), _barbell(i, 0))
    rhs = DiagramSum.of(
        _pair_word(n, d, i, [[(dot_down(i), 0)]], coeff=2),
        _pair_word(n, d, i, [[(bubble(i, -2, False), 1)]], coeff=-1),
    )
    return lhs, rhs


# -- boxes -------------------------------------------------------------------


def box_barbell(n: int, d: int, i: int):
    lhs = build_soergel(n, d, (), _barbell(i, 0))
    rhs = SoergelSum.of(
        build_soergel(n, d, (), _one((box(i), 0))),
        build_soergel(n, d, (), _one((box(i + 1), 0)), coeff=-1),
    )
    return lhs, rhs


def box_sum_slide(n: int, d: int, i: int):
    def side(p: int) -> SoergelSum:
        return SoergelSum.of(
            build_soergel(n, d, (i,), _one((box(i), p))),
            build_soergel(n, d, (i,), _one((box(i + 1), p))),
        )

    return side(0), side(1)


def box_product_slide(n: int, d: int, i: int):
    def side(p: int) -> SoergelWord:
        return build_soergel(n, d, (i,), _one((box(i), p), (box(i + 1), p)))

    return side(0), side(1)


def box_distant_slide(n: int, d: int, i: int, j: int):
    return (
        build_soergel(n, d, (i,), _one((box(j), 0))),
        build_soergel(n, d, (i,), _one((box(j), 1))),
    )


def box_samples(d: int) -> list:
    """Monomials of degree one and two in the boxes."""
    x = box_ring(d).gens
    return [*x, *(x[a] * x[b] for a in range(d) for b in range(a, d))]


def box_symmetric_slide(n: int, d: int, i: int, k: int):
    symmetric, _ = box_normalize(box_samples(d)[k], i)
    return box_polynomial(symmetric, n, d, (i,), 0), box_polynomial(symmetric, n, d, (i,), 1)


# -- catalogue ---------------------------------------------------------------

# name -> (family, colour pattern, sides)
SOERGEL_RELATIONS: dict[str, tuple[str, str, Callable[..., tuple[Side, Side]]]] = {
    "adjunction-left": ("isotopy", "one", adjunction_left),
    "adjunction-right": ("isotopy", "one", adjunction_right),
    "dot-rotation-down": ("isotopy", "one", dot_rotation_down),
    "dot-rotation-up": ("isotopy", "one", dot_rotation_up),
    "trivalent-rotation-left": ("isotopy", "one", trivalent_rotation_left),
    "trivalent-rotation-right": ("isotopy", "one", trivalent_rotation_right),
    "four-rotation": ("isotopy", "distant", four_rotation),
    "six-rotation": ("isotopy", "adjacent", six_rotation),
    "barbell-rotation": ("isotopy", "one", barbell_rotation),
    "lollipop": ("one-colour", "one", lollipop),
    "needle": ("one-colour", "one", needle),
    "barbell-forcing": ("one-colour", "one", barbell_forcing),
    "r2": ("distant", "distant", distant_r2),
    "dot-slide": ("distant", "distant", distant_dot_slide),
    "trivalent-slide": ("distant", "distant", distant_trivalent_slide),
    "barbell-slide": ("distant", "distant", distant_barbell_slide),
    "dot-six-top": ("adjacent", "adjacent", dot_six_top),
    "dot-six-bottom": ("adjacent", "adjacent", dot_six_bottom),
    "six-r3": ("adjacent", "adjacent", six_r3),
    "dumbbell-square": ("adjacent", "adjacent", dumbbell_square),
    "adjacent-barbell-slide": ("adjacent", "adjacent", adjacent_barbell_slide),
    "six-slide": ("three-colour", "six-slide", six_slide),
    "four-slide": ("three-colour", "four-slide", four_slide),
    "polynomial-forcing": ("three-colour", "middle", polynomial_forcing),
    "double-dumbbell-square": ("three-colour", "middle", double_dumbbell_square),
    "edge-dots": ("derived", "one", edge_dots),
    "dots-edge": ("derived", "one", dots_edge),
    "box-barbell": ("boxes", "box", box_barbell),
    "box-sum-slide": ("boxes", "box", box_sum_slide),
    "box-product-slide": ("boxes", "box", box_product_slide),
    "box-distant-slide": ("boxes", "box-distant", box_distant_slide),
    "box-symmetric-slide": ("boxes", "box-sample", box_symmetric_slide),
}


def colour_tuples(pattern: str, n: int, d: int) -> Iterator[tuple[int, ...]]:
    """Every colour assignment of a pattern that exists in the category."""
    top = max_colour(n, d)
    colours = range(1, top + 1)
    if pattern.startswith("box") and d >= n:
        return
    if pattern == "one":
        yield from ((i,) for i in colours)
    elif pattern in ("distant", "adjacent"):
        for a in colours:
            for b in colours:
                gap = abs(a - b)
                if (pattern == "distant" and gap > 1) or (pattern == "adjacent" and gap == 1):
                    yield a, b
    elif pattern == "six-slide":
        for a in colours:
            for b in (a - 1, a + 1):
                if b not in colours:
                    continue
                for c in colours:
                    if abs(c - a) > 1 and abs(c - b) > 1:
                        yield a, b, c
    elif pattern == "four-slide":
        for triple in permutations(colours, 3):
            a, b, c = triple
            if min(abs(a - b), abs(b - c), abs(a - c)) > 1:
                yield triple
    elif pattern == "middle":
        yield from ((i,) for i in colours if i - 1 in colours and i + 1 in colours)
    elif pattern == "box":
        yield from ((i,) for i in colours)
    elif pattern == "box-distant":
        for i in colours:
            for j in range(1, d + 1):
                if j not in (i, i + 1):
                    yield i, j
    elif pattern == "box-sample":
        for i in colours:
            for k in range(len(box_samples(d))):
                yield i, k
    else:
        raise DomainError(f"unknown colour pattern {pattern!r}")


def relation_sides(n: int, d: int, name: str, colours: tuple[int, ...]) -> tuple[DiagramSum, DiagramSum]:
    """Both sides of a relation, pushed into S(n,d)."""
    _, _, build = SOERGEL_RELATIONS[name]
    lhs, rhs = build(n, d, *colours)
    left = _pushed(lhs)
    right = DiagramSum.zero(left.terms[0]) if rhs is None else _pushed(rhs)
    return left, right


def _pushed(side: Side) -> DiagramSum:
    if isinstance(side, SoergelWord | SoergelSum):
        return sigma(side)
    return as_sum(side)


def check_soergel_relation(n: int, d: int, name: str, colours: tuple[int, ...], panel: int, seed: int):
    lhs, rhs = relation_sides(n, d, name, colours)
    return sums_differ(lhs, rhs, panel, seed)


def check_soergel_grading(n: int, d: int, name: str, colours: tuple[int, ...]) -> str | None:
    """Each Soergel side keeps its degree under the functor."""
    _, _, build = SOERGEL_RELATIONS[name]
    for side in build(n, d, *colours):
        if not isinstance(side, SoergelWord | SoergelSum):
            continue
        words = side.terms if isinstance(side, SoergelSum) else (side,)
        for w in words:
            pushed = sigma(w).degrees()
            if pushed != {w.degree}:
                return f"degree {w.degree} becomes {sorted(pushed)}"
    return None


def _tag(colours: tuple[int, ...]) -> str:
    return "-".join(str(c) for c in colours)


def _cases(family: str, n: int, d: int, panel: int, seed: int) -> list[Case]:
    out = []
    for name, (fam, pattern, _) in SOERGEL_RELATIONS.items():
        if fam != family:
            continue
        for colours in colour_tuples(pattern, n, d):
            params: dict[str, Any] = {"n": n, "d": d, "colours": list(colours)}
            out.append(
                Case(
                    f"{family}/{name}/{_tag(colours)}",
                    name,
                    check_soergel_relation,
                    (n, d, name, colours, panel, seed),
                    params,
                )
            )
    return out


def isotopy_cases(n: int, d: int, panel: int, seed: int, max_degree: int) -> list[Case]:
    return _cases("isotopy", n, d, panel, seed)


def one_colour_cases(n: int, d: int, panel: int, seed: int, max_degree: int) -> list[Case]:
    return _cases("one-colour", n, d, panel, seed)


def distant_cases(n: int, d: int, panel: int, seed: int, max_degree: int) -> list[Case]:
    return _cases("distant", n, d, panel, seed)


def adjacent_cases(n: int, d: int, panel: int, seed: int, max_degree: int) -> list[Case]:
    return _cases("adjacent", n, d, panel, seed)


def three_colour_cases(n: int, d: int, panel: int, seed: int, max_degree: int) -> list[Case]:
    return _cases("three-colour", n, d, panel, seed)


def derived_cases(n: int, d: int, panel: int, seed: int, max_degree: int) -> list[Case]:
    return _cases("derived", n, d, panel, seed)


def box_cases(n: int, d: int, panel: int, seed: int, max_degree: int) -> list[Case]:
    return _cases("boxes", n, d, panel, seed)


def grading_cases(n: int, d: int, panel: int, seed: int, max_degree: int) -> list[Case]:
    out = []
    for name, (_, pattern, _) in SOERGEL_RELATIONS.items():
        for colours in colour_tuples(pattern, n, d):
            out.append(
                Case(
                    f"grading/{name}/{_tag(colours)}",
                    "grading",
                    check_soergel_grading,
                    (n, d, name, colours),
                    {"n": n, "d": d, "relation": name, "colours": list(colours)},
                )
            )
    return out


SOERGEL_FAMILIES: dict[str, Callable[[int, int, int, int, int], list[Case]]] = {
    "isotopy": isotopy_cases,
    "one-colour": one_colour_cases,
    "distant": distant_cases,
    "adjacent": adjacent_cases,
    "three-colour": three_colour_cases,
    "derived": derived_cases,
    "boxes": box_cases,
    "grading": grading_cases,
}
