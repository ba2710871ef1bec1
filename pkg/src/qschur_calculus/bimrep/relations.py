"""
The relation catalogue of S(n,d), instantiated at every weight and colour tuple.

Each check takes only plain values so that cases can be shipped to worker
processes. A check returns None when both sides evaluate to the same bimodule
map and a witness string otherwise.
"""

from collections.abc import Callable, Iterator
from typing import Any

from ..diagrams.atoms import (
    DOWN,
    UP,
    Letter,
    bubble,
    cap_ef,
    cap_fe,
    cross_dd,
    cross_lr,
    cross_rl,
    cross_uu,
    cup_ef,
    cup_fe,
    dot_down,
    dot_up,
)
from ..diagrams.word import (
    DiagramSum,
    DiagramWord,
    as_sum,
    build_word,
    rotate180,
    sideways_expansion,
)
from ..polysym import format_poly
from ..runner import Case
from ..weights import Weight, alpha, bar_i, enumerate_lambda
from .bubbles import bubble_value, closed_form, label_of
from .evaluate import eval_diagram, sums_differ
from .section import section

Sides = tuple[DiagramSum | DiagramWord, DiagramSum | DiagramWord]


def _plus(lam: Weight, i: int) -> Weight:
    return tuple(x + a for x, a in zip(lam, alpha(i, len(lam)), strict=True))


def _identity(n: int, d: int, lam: Weight, letters: tuple[Letter, ...]) -> DiagramWord:
    return DiagramWord.identity(n, d, lam, letters)


def _zero(like: DiagramWord) -> DiagramSum:
    return DiagramSum.zero(like)


def _total(first: DiagramWord, terms: list[DiagramWord]) -> DiagramSum:
    """Sum of ``terms``, parallel to ``first`` even when empty."""
    out = DiagramSum.zero(first)
    for t in terms:
        out = out + t
    return out


def _rotate_side(side: DiagramSum | DiagramWord) -> DiagramSum:
    s = as_sum(side)
    if s.terms:
        return DiagramSum.of(*(rotate180(t) for t in s.terms))
    turned = rotate180(DiagramWord.identity(s.n, s.d, s.lam, s.bottom))
    bottom = tuple((c, -sg) for c, sg in reversed(s.top))
    return DiagramSum(s.n, s.d, turned.lam, bottom, turned.bottom, ())


def _compare(sides: Sides, panel: int, seed: int, rotated: bool = False) -> str | None:
    lhs, rhs = sides
    if rotated:
        lhs, rhs = _rotate_side(lhs), _rotate_side(rhs)
    return sums_differ(lhs, rhs, panel, seed)


def _valid(n: int, d: int, lam: Weight, letters: tuple[Letter, ...]) -> bool:
    return section(n, d, tuple(lam), tuple(letters)).valid


# -- biadjointness and cyclicity ---------------------------------------------


def check_biadjoint(n: int, d: int, lam: Weight, i: int, sign: int, which: int, panel: int, seed: int):
    letters = ((i, sign),)
    if sign == UP:
        steps = [[(cup_fe(i), 0)], [(cap_ef(i), 1)]] if which == 0 else [[(cup_ef(i), 1)], [(cap_fe(i), 0)]]
    else:
        steps = [[(cup_ef(i), 0)], [(cap_fe(i), 1)]] if which == 0 else [[(cup_fe(i), 1)], [(cap_ef(i), 0)]]
    zigzag = build_word(n, d, lam, letters, steps)
    return _compare((zigzag, _identity(n, d, lam, letters)), panel, seed)


def check_cyclic_dot(n: int, d: int, lam: Weight, i: int, which: int, panel: int, seed: int):
    letters = ((i, DOWN),)
    direct = build_word(n, d, lam, letters, [[(dot_down(i), 0)]])
    if which == 0:
        steps = [[(cup_ef(i), 0)], [(dot_up(i), 1)], [(cap_fe(i), 1)]]
    else:
        steps = [[(cup_fe(i), 1)], [(dot_up(i), 1)], [(cap_ef(i), 0)]]
    return _compare((direct, build_word(n, d, lam, letters, steps)), panel, seed)


def check_cyclic_cross(n: int, d: int, lam: Weight, a: int, b: int, which: int, panel: int, seed: int):
    letters = ((a, DOWN), (b, DOWN))
    direct = build_word(n, d, lam, letters, [[(cross_dd(a, b), 0)]])
    if which == 0:
        steps = [
            [(cup_ef(b), 0)],
            [(cup_ef(a), 1)],
            [(cross_uu(a, b), 2)],
            [(cap_fe(a), 3)],
            [(cap_fe(b), 2)],
        ]
    else:
        steps = [
            [(cup_fe(a), 2)],
            [(cup_fe(b), 3)],
            [(cross_uu(a, b), 2)],
            [(cap_ef(b), 1)],
            [(cap_ef(a), 0)],
        ]
    return _compare((direct, build_word(n, d, lam, letters, steps)), panel, seed)


def check_sideways(n: int, d: int, lam: Weight, kind: str, a: int, b: int, panel: int, seed: int):
    atom = cross_lr(a, b) if kind == "xLR" else cross_rl(a, b)
    letters = ((a, UP), (b, DOWN)) if kind == "xLR" else ((a, DOWN), (b, UP))
    primitive = build_word(n, d, lam, letters, [[(atom, 0)]])
    for variant in (1, 2):
        twisted = build_word(n, d, lam, letters, sideways_expansion(atom, 0, variant))
        diff = _compare((primitive, twisted), panel, seed)
        if diff:
            return f"variant {variant}: {diff}"
    return None


# -- bubbles -----------------------------------------------------------------


def _formal(n: int, d: int, lam: Weight, i: int, r: int, clockwise: bool, coeff: int = 1) -> DiagramWord:
    return build_word(n, d, lam, (), [[(bubble(i, r, clockwise), 0)]], coeff=coeff)


def _literal(n: int, d: int, lam: Weight, i: int, r: int, clockwise: bool) -> DiagramWord:
    if clockwise:
        steps = [[(cup_fe(i), 0)], [(dot_up(i, r), 0)], [(cap_fe(i), 0)]]
    else:
        steps = [[(cup_ef(i), 0)], [(dot_up(i, r), 1)], [(cap_ef(i), 0)]]
    return build_word(n, d, lam, (), steps)


def check_bubble_positivity(n: int, d: int, lam: Weight, i: int, clockwise: bool, r: int) -> str | None:
    value = bubble_value(clockwise, r, i, lam, d)
    if value:
        return f"bubble value {format_poly(value)} in negative degree"
    if not eval_diagram(_literal(n, d, lam, i, r, clockwise)).is_zero:
        return "literal bubble of negative degree is not zero"
    return None


def check_bubble_degree_zero(n: int, d: int, lam: Weight, i: int, clockwise: bool) -> str | None:
    lam_bar = bar_i(lam, i)
    r = label_of(clockwise, 0, lam_bar)
    expected = (-1) ** lam[i] if clockwise else (-1) ** (lam[i] - 1)
    value = bubble_value(clockwise, r, i, lam, d)
    if value != expected:
        return f"degree zero value {format_poly(value)}, expected {expected}"
    return None


def check_bubble_literal(n: int, d: int, lam: Weight, i: int, clockwise: bool, r: int, panel: int, seed: int):
    sides = (_literal(n, d, lam, i, r, clockwise), _formal(n, d, lam, i, r, clockwise))
    return _compare(sides, panel, seed)


def check_infinite_grassmannian(n: int, d: int, lam: Weight, i: int, total: int, panel: int, seed: int):
    lam_bar = bar_i(lam, i)
    terms = []
    for k in range(total + 1):
        r_cw = label_of(True, k, lam_bar)
        r_ccw = label_of(False, total - k, lam_bar)
        terms.append(
            build_word(
                n, d, lam, (), [[(bubble(i, r_cw, True), 0)], [(bubble(i, r_ccw, False), 0)]]
            )
        )
    empty = _identity(n, d, lam, ())
    rhs = DiagramSum.of(empty.scaled(-1)) if total == 0 else _zero(empty)
    return _compare((_total(empty, terms), rhs), panel, seed)


def check_fake_closed_form(n: int, d: int, lam: Weight, i: int, clockwise: bool, k: int) -> str | None:
    sec = section(n, d, tuple(lam), ())
    T, U = sec.alphabet(sec.initial[i - 1]), sec.alphabet(sec.initial[i])
    r = label_of(clockwise, k, bar_i(lam, i))
    value = bubble_value(clockwise, r, i, lam, d)
    expected = closed_form(clockwise, k, T, U)
    if value != expected:
        return f"fake bubble {format_poly(value)} != closed form {format_poly(expected)}"
    return None


def check_twisted_bubble(n: int, d: int, lam: Weight, i: int, panel: int, seed: int):
    """At a local (0,1,0) the dotted (i+1)-bubble equals the fake i-bubble of label -1."""
    red = _formal(n, d, lam, i + 1, 1, True)
    blue = _formal(n, d, lam, i, -1, True)
    return _compare((red, blue), panel, seed)


# -- curls and the EF decompositions -----------------------------------------


def check_curl(n: int, d: int, lam: Weight, i: int, side: str, rotated: bool, panel: int, seed: int):
    letters = ((i, UP),)
    lam_bar = bar_i(lam, i)
    if side == "right":
        curl = build_word(
            n, d, lam, letters, [[(cup_fe(i), 1)], [(cross_uu(i, i), 0)], [(cap_fe(i), 1)]]
        )
        terms = [
            build_word(
                n, d, lam, letters,
                [[(dot_up(i, -lam_bar - f), 0)], [(bubble(i, lam_bar - 1 + f, True), 1)]],
                coeff=-1,
            )
            for f in range(-lam_bar + 1)
        ]
    else:
        left_bar = lam_bar + 2
        curl = build_word(
            n, d, lam, letters, [[(cup_ef(i), 0)], [(cross_uu(i, i), 1)], [(cap_ef(i), 0)]]
        )
        terms = [
            build_word(
                n, d, lam, letters,
                [[(bubble(i, -left_bar - 1 + g, False), 0)], [(dot_up(i, left_bar - g), 0)]],
            )
            for g in range(left_bar + 1)
        ]
    return _compare((curl, _total(curl, terms)), panel, seed, rotated)


def check_ef_decomposition(n: int, d: int, lam: Weight, i: int, order: str, panel: int, seed: int):
    lam_bar = bar_i(lam, i)
    if order == "EF":
        letters = ((i, UP), (i, DOWN))
        crossings = build_word(n, d, lam, letters, [[(cross_lr(i, i), 0)], [(cross_rl(i, i), 0)]])
        terms = [
            build_word(
                n, d, lam, letters,
                [
                    [(dot_up(i, f - g), 0)],
                    [(cap_fe(i), 0)],
                    [(bubble(i, -lam_bar - 1 + g, False), 0)],
                    [(cup_fe(i), 0)],
                    [(dot_up(i, lam_bar - 1 - f), 0)],
                ],
                coeff=-1,
            )
            for f in range(lam_bar)
            for g in range(f + 1)
        ]
    else:
        letters = ((i, DOWN), (i, UP))
        crossings = build_word(n, d, lam, letters, [[(cross_rl(i, i), 0)], [(cross_lr(i, i), 0)]])
        terms = [
            build_word(
                n, d, lam, letters,
                [
                    [(dot_up(i, f - g), 1)],
                    [(cap_ef(i), 0)],
                    [(bubble(i, lam_bar - 1 + g, True), 0)],
                    [(cup_ef(i), 0)],
                    [(dot_up(i, -lam_bar - 1 - f), 1)],
                ],
                coeff=-1,
            )
            for f in range(-lam_bar)
            for g in range(f + 1)
        ]
    rhs = _total(crossings, [crossings, *terms])
    return _compare((_identity(n, d, lam, letters), rhs), panel, seed)


# -- KLR relations on upward strands -----------------------------------------


def check_nil_square(n: int, d: int, lam: Weight, i: int, rotated: bool, panel: int, seed: int):
    letters = ((i, UP), (i, UP))
    double = build_word(n, d, lam, letters, [[(cross_uu(i, i), 0)], [(cross_uu(i, i), 0)]])
    return _compare((double, _zero(double)), panel, seed, rotated)


def check_nil_braid(n: int, d: int, lam: Weight, i: int, rotated: bool, panel: int, seed: int):
    letters = ((i, UP),) * 3
    x = cross_uu(i, i)
    lhs = build_word(n, d, lam, letters, [[(x, 0)], [(x, 1)], [(x, 0)]])
    rhs = build_word(n, d, lam, letters, [[(x, 1)], [(x, 0)], [(x, 1)]])
    return _compare((lhs, rhs), panel, seed, rotated)


def check_nil_dot_slide(n: int, d: int, lam: Weight, i: int, which: int, rotated: bool, panel: int, seed: int):
    letters = ((i, UP), (i, UP))
    x, dot = cross_uu(i, i), dot_up(i)
    if which == 0:
        first = build_word(n, d, lam, letters, [[(dot, 0)], [(x, 0)]])
        second = build_word(n, d, lam, letters, [[(x, 0)], [(dot, 1)]], coeff=-1)
    else:
        first = build_word(n, d, lam, letters, [[(x, 0)], [(dot, 0)]])
        second = build_word(n, d, lam, letters, [[(dot, 1)], [(x, 0)]], coeff=-1)
    identity = _identity(n, d, lam, letters)
    return _compare((identity, DiagramSum.of(first, second)), panel, seed, rotated)


def check_downup(n: int, d: int, lam: Weight, i: int, j: int, order: str, panel: int, seed: int):
    if order == "EF":
        letters = ((i, UP), (j, DOWN))
        steps = [[(cross_lr(i, j), 0)], [(cross_rl(j, i), 0)]]
    else:
        letters = ((i, DOWN), (j, UP))
        steps = [[(cross_rl(i, j), 0)], [(cross_lr(j, i), 0)]]
    word = build_word(n, d, lam, letters, steps)
    return _compare((word, _identity(n, d, lam, letters)), panel, seed)


def check_r2(n: int, d: int, lam: Weight, i: int, j: int, rotated: bool, panel: int, seed: int):
    letters = ((i, UP), (j, UP))
    double = build_word(n, d, lam, letters, [[(cross_uu(i, j), 0)], [(cross_uu(j, i), 0)]])
    if abs(i - j) > 1:
        rhs: DiagramSum | DiagramWord = _identity(n, d, lam, letters)
    else:
        c = i - j
        rhs = DiagramSum.of(
            build_word(n, d, lam, letters, [[(dot_up(i), 0)]], coeff=c),
            build_word(n, d, lam, letters, [[(dot_up(j), 1)]], coeff=-c),
        )
    return _compare((double, rhs), panel, seed, rotated)


def check_dot_slide(n: int, d: int, lam: Weight, i: int, j: int, which: int, rotated: bool, panel: int, seed: int):
    letters = ((i, UP), (j, UP))
    x = cross_uu(i, j)
    if which == 0:
        below = build_word(n, d, lam, letters, [[(dot_up(i), 0)], [(x, 0)]])
        above = build_word(n, d, lam, letters, [[(x, 0)], [(dot_up(i), 1)]])
    else:
        below = build_word(n, d, lam, letters, [[(dot_up(j), 1)], [(x, 0)]])
        above = build_word(n, d, lam, letters, [[(x, 0)], [(dot_up(j), 0)]])
    return _compare((below, above), panel, seed, rotated)


def _r3_sides(n: int, d: int, lam: Weight, i: int, j: int, k: int) -> tuple[DiagramWord, DiagramWord]:
    letters = ((i, UP), (j, UP), (k, UP))
    lhs = build_word(
        n, d, lam, letters, [[(cross_uu(i, j), 0)], [(cross_uu(i, k), 1)], [(cross_uu(j, k), 0)]]
    )
    rhs = build_word(
        n, d, lam, letters, [[(cross_uu(j, k), 1)], [(cross_uu(i, k), 0)], [(cross_uu(i, j), 1)]]
    )
    return lhs, rhs


def check_r3(n: int, d: int, lam: Weight, i: int, j: int, k: int, rotated: bool, panel: int, seed: int):
    lhs, rhs = _r3_sides(n, d, lam, i, j, k)
    if i == k and abs(i - j) == 1:
        identity = _identity(n, d, lam, lhs.bottom)
        sides: Sides = (DiagramSum.of(lhs, rhs.scaled(-1)), identity.scaled(i - j))
    else:
        sides = (lhs, rhs)
    return _compare(sides, panel, seed, rotated)


def check_r3_mixed(n: int, d: int, lam: Weight, i: int, j: int, k: int, panel: int, seed: int):
    letters = ((i, UP), (j, DOWN), (k, UP))
    lhs = build_word(
        n, d, lam, letters, [[(cross_lr(i, j), 0)], [(cross_uu(i, k), 1)], [(cross_rl(j, k), 0)]]
    )
    rhs = build_word(
        n, d, lam, letters, [[(cross_rl(j, k), 1)], [(cross_uu(i, k), 0)], [(cross_lr(i, j), 1)]]
    )
    return _compare((lhs, rhs), panel, seed)


def _four_part(total: int) -> Iterator[tuple[int, int, int, int]]:
    for a in range(total + 1):
        for b in range(total - a + 1):
            for c in range(total - a - b + 1):
                yield a, b, c, total - a - b - c


def check_r3_same_colour(n: int, d: int, lam: Weight, i: int, panel: int, seed: int):
    letters = ((i, UP), (i, DOWN), (i, UP))
    lam_bar = bar_i(lam, i)
    x = cross_uu(i, i)
    first = build_word(
        n, d, lam, letters, [[(cross_lr(i, i), 0)], [(x, 1)], [(cross_rl(i, i), 0)]]
    )
    second = build_word(
        n, d, lam, letters, [[(cross_rl(i, i), 1)], [(x, 0)], [(cross_lr(i, i), 1)]], coeff=-1
    )
    terms = [
        build_word(
            n, d, lam, letters,
            [
                [(dot_up(i, f3), 0), (dot_up(i, f2), 2)],
                [(cap_fe(i), 0)],
                [(bubble(i, -lam_bar - 3 + f4, False), 0)],
                [(cup_fe(i), 0)],
                [(dot_up(i, f1), 0)],
            ],
        )
        for f1, f2, f3, f4 in _four_part(lam_bar)
    ]
    terms += [
        build_word(
            n, d, lam, letters,
            [
                [(dot_up(i, g2), 0), (dot_up(i, g3), 2)],
                [(cap_ef(i), 1)],
                [(bubble(i, lam_bar - 1 + g4, True), 1)],
                [(cup_ef(i), 1)],
                [(dot_up(i, g1), 2)],
            ],
        )
        for g1, g2, g3, g4 in _four_part(-lam_bar - 2)
    ]
    return _compare((DiagramSum.of(first, second), _total(first, terms)), panel, seed)


# -- bubble slides -----------------------------------------------------------


def _slide_word(
    n: int, d: int, lam: Weight, i: int, j: int, clockwise: bool, index: int, left: bool, dots: int, coeff: int
) -> DiagramWord:
    region = _plus(lam, j) if left else lam
    r = label_of(clockwise, index, bar_i(region, i))
    return build_word(
        n, d, lam, ((j, UP),),
        [[(bubble(i, r, clockwise), 0 if left else 1)], [(dot_up(j, dots), 0)]],
        coeff=coeff,
    )


def check_bubble_slide(
    n: int, d: int, lam: Weight, i: int, j: int, clockwise: bool, m: int, form: int, panel: int, seed: int
):
    """
    A bubble of degree index m on one side of an upward j-strand, written in
    terms of bubbles on the other side.
    """

    def w(index: int, left: bool, dots: int = 0, coeff: int = 1) -> DiagramWord:
        return _slide_word(n, d, lam, i, j, clockwise, index, left, dots, coeff)

    sign = -1 if j == i - 1 else 1
    if i == j and clockwise:
        # -(1 - xt)^2 times the generating function of the left-hand bubbles
        lhs = w(m, left=False)
        terms = [w(m - k, True, k, c) for k, c in ((0, -1), (1, 2), (2, -1)) if k <= m]
    elif i == j:
        lhs = w(m, left=False)
        terms = [w(f, True, m - f, f - m - 1) for f in range(m + 1)]
    elif abs(i - j) > 1:
        lhs = w(m, left=form == 0)
        terms = [w(m, left=form != 0)]
    elif form == 0:
        # b(m) = sign * (x b(m-1) - b(m)) with the right-hand bubbles on the far side
        lhs_left = clockwise
        lhs = w(m, left=lhs_left)
        terms = [w(m, not lhs_left, 0, -sign)]
        if m >= 1:
            terms.append(w(m - 1, not lhs_left, 1, sign))
    else:
        lhs_left = not clockwise
        lhs = w(m, left=lhs_left)
        terms = [w(g, not lhs_left, m - g, -sign) for g in range(m + 1)]
    return _compare((lhs, _total(lhs, terms)), panel, seed)


# -- catalogue ---------------------------------------------------------------


def _lam_tag(lam: Weight) -> str:
    return "".join(str(x) for x in lam)


def _colours(n: int) -> range:
    return range(1, n)


def _case(
    family: str, relation: str, check: Callable[..., str | None], args: tuple[Any, ...], **params
) -> Case:
    tag = "/".join(f"{k}{v if not isinstance(v, tuple) else _lam_tag(v)}" for k, v in params.items())
    parameters = {k: list(v) if isinstance(v, tuple) else v for k, v in params.items()}
    return Case(f"{family}/{relation}/{tag}", relation, check, args, parameters)


def biadjoint_cases(n: int, d: int, panel: int, seed: int, max_degree: int) -> list[Case]:
    out = []
    for lam in enumerate_lambda(n, d):
        for i in _colours(n):
            for sign, name in ((UP, "up"), (DOWN, "down")):
                if not _valid(n, d, lam, ((i, sign),)):
                    continue
                for which in (0, 1):
                    out.append(
                        _case(
                            "biadjoint", f"zigzag-{name}-{which}", check_biadjoint,
                            (n, d, lam, i, sign, which, panel, seed), n=n, d=d, lam=lam, i=i,
                        )
                    )
    return out


def cyclic_cases(n: int, d: int, panel: int, seed: int, max_degree: int) -> list[Case]:
    out = []
    for lam in enumerate_lambda(n, d):
        for i in _colours(n):
            if _valid(n, d, lam, ((i, DOWN),)):
                for which in (0, 1):
                    out.append(
                        _case(
                            "cyclic", f"dot-{which}", check_cyclic_dot,
                            (n, d, lam, i, which, panel, seed), n=n, d=d, lam=lam, i=i,
                        )
                    )
            for j in _colours(n):
                if not _valid(n, d, lam, ((i, DOWN), (j, DOWN))):
                    continue
                for which in (0, 1):
                    out.append(
                        _case(
                            "cyclic", f"crossing-{which}", check_cyclic_cross,
                            (n, d, lam, i, j, which, panel, seed), n=n, d=d, lam=lam, i=i, j=j,
                        )
                    )
    return out


def sideways_cases(n: int, d: int, panel: int, seed: int, max_degree: int) -> list[Case]:
    out = []
    for lam in enumerate_lambda(n, d):
        for a in _colours(n):
            for b in _colours(n):
                for kind, letters in (("xLR", ((a, UP), (b, DOWN))), ("xRL", ((a, DOWN), (b, UP)))):
                    if not _valid(n, d, lam, letters):
                        continue
                    out.append(
                        _case(
                            "sideways", kind, check_sideways,
                            (n, d, lam, kind, a, b, panel, seed), n=n, d=d, lam=lam, i=a, j=b,
                        )
                    )
    return out


def bubble_cases(n: int, d: int, panel: int, seed: int, max_degree: int) -> list[Case]:
    out = []
    for lam in enumerate_lambda(n, d):
        for i in _colours(n):
            lam_bar = bar_i(lam, i)
            for clockwise, name in ((True, "cw"), (False, "ccw")):
                params = {"n": n, "d": d, "lam": lam, "i": i}
                zero_label = label_of(clockwise, 0, lam_bar)
                for r in range(zero_label):
                    out.append(
                        _case(
                            "bubbles", f"positivity-{name}", check_bubble_positivity,
                            (n, d, lam, i, clockwise, r), **params, r=r,
                        )
                    )
                out.append(
                    _case(
                        "bubbles", f"degree-zero-{name}", check_bubble_degree_zero,
                        (n, d, lam, i, clockwise), **params,
                    )
                )
                for r in range(5):
                    out.append(
                        _case(
                            "bubbles", f"literal-{name}", check_bubble_literal,
                            (n, d, lam, i, clockwise, r, panel, seed), **params, r=r,
                        )
                    )
                for k in range(1, max_degree // 2 + 1):
                    if label_of(clockwise, k, lam_bar) < 0:
                        out.append(
                            _case(
                                "bubbles", f"fake-{name}", check_fake_closed_form,
                                (n, d, lam, i, clockwise, k), **params, k=k,
                            )
                        )
            for total in range(max_degree // 2 + 1):
                out.append(
                    _case(
                        "bubbles", "infinite-grassmannian", check_infinite_grassmannian,
                        (n, d, lam, i, total, panel, seed), n=n, d=d, lam=lam, i=i, k=total,
                    )
                )
            if i + 1 < n and lam[i - 1 : i + 2] == (0, 1, 0):
                out.append(
                    _case(
                        "bubbles", "twisted", check_twisted_bubble,
                        (n, d, lam, i, panel, seed), n=n, d=d, lam=lam, i=i,
                    )
                )
    return out


def curl_cases(n: int, d: int, panel: int, seed: int, max_degree: int) -> list[Case]:
    out = []
    for lam in enumerate_lambda(n, d):
        for i in _colours(n):
            if not _valid(n, d, lam, ((i, UP),)):
                continue
            for side in ("right", "left"):
                for rotated in (False, True):
                    name = f"{side}{'-rotated' if rotated else ''}"
                    out.append(
                        _case(
                            "curls", name, check_curl,
                            (n, d, lam, i, side, rotated, panel, seed), n=n, d=d, lam=lam, i=i,
                        )
                    )
    return out


def ef_cases(n: int, d: int, panel: int, seed: int, max_degree: int) -> list[Case]:
    out = []
    for lam in enumerate_lambda(n, d):
        for i in _colours(n):
            for order, letters in (("EF", ((i, UP), (i, DOWN))), ("FE", ((i, DOWN), (i, UP)))):
                if not _valid(n, d, lam, letters):
                    continue
                out.append(
                    _case(
                        "EF", f"decomposition-{order}", check_ef_decomposition,
                        (n, d, lam, i, order, panel, seed), n=n, d=d, lam=lam, i=i,
                    )
                )
    return out


def nilhecke_cases(n: int, d: int, panel: int, seed: int, max_degree: int) -> list[Case]:
    out = []
    for lam in enumerate_lambda(n, d):
        for i in _colours(n):
            for rotated in (False, True):
                suffix = "-rotated" if rotated else ""
                params = {"n": n, "d": d, "lam": lam, "i": i}
                if _valid(n, d, lam, ((i, UP),) * 2):
                    out.append(
                        _case(
                            "nilhecke", f"square{suffix}", check_nil_square,
                            (n, d, lam, i, rotated, panel, seed), **params,
                        )
                    )
                    for which in (0, 1):
                        out.append(
                            _case(
                                "nilhecke", f"dot-slide-{which}{suffix}", check_nil_dot_slide,
                                (n, d, lam, i, which, rotated, panel, seed), **params,
                            )
                        )
                if _valid(n, d, lam, ((i, UP),) * 3):
                    out.append(
                        _case(
                            "nilhecke", f"braid{suffix}", check_nil_braid,
                            (n, d, lam, i, rotated, panel, seed), **params,
                        )
                    )
    return out


def mixed_cases(n: int, d: int, panel: int, seed: int, max_degree: int) -> list[Case]:
    out = []
    for lam in enumerate_lambda(n, d):
        for i in _colours(n):
            for j in _colours(n):
                if i == j:
                    continue
                params = {"n": n, "d": d, "lam": lam, "i": i, "j": j}
                for order, letters in (("EF", ((i, UP), (j, DOWN))), ("FE", ((i, DOWN), (j, UP)))):
                    if _valid(n, d, lam, letters):
                        out.append(
                            _case(
                                "mixed", f"downup-{order}", check_downup,
                                (n, d, lam, i, j, order, panel, seed), **params,
                            )
                        )
                if not _valid(n, d, lam, ((i, UP), (j, UP))):
                    continue
                for rotated in (False, True):
                    suffix = "-rotated" if rotated else ""
                    out.append(
                        _case(
                            "mixed", f"r2{suffix}", check_r2,
                            (n, d, lam, i, j, rotated, panel, seed), **params,
                        )
                    )
                    for which in (0, 1):
                        out.append(
                            _case(
                                "mixed", f"dot-slide-{which}{suffix}", check_dot_slide,
                                (n, d, lam, i, j, which, rotated, panel, seed), **params,
                            )
                        )
    return out


def r3_cases(n: int, d: int, panel: int, seed: int, max_degree: int) -> list[Case]:
    out = []
    colours = list(_colours(n))
    for lam in enumerate_lambda(n, d):
        for i in colours:
            for j in colours:
                for k in colours:
                    params = {"n": n, "d": d, "lam": lam, "i": i, "j": j, "k": k}
                    if _valid(n, d, lam, ((i, UP), (j, UP), (k, UP))):
                        hard = i == k and abs(i - j) == 1
                        for rotated in (False, True):
                            name = f"{'hard' if hard else 'easy'}{'-rotated' if rotated else ''}"
                            out.append(
                                _case(
                                    "r3", name, check_r3,
                                    (n, d, lam, i, j, k, rotated, panel, seed), **params,
                                )
                            )
                    if not _valid(n, d, lam, ((i, UP), (j, DOWN), (k, UP))):
                        continue
                    if i == j == k:
                        out.append(
                            _case(
                                "r3", "same-colour", check_r3_same_colour,
                                (n, d, lam, i, panel, seed), **params,
                            )
                        )
                    else:
                        out.append(
                            _case(
                                "r3", "mixed", check_r3_mixed,
                                (n, d, lam, i, j, k, panel, seed), **params,
                            )
                        )
    return out


def bubble_slide_cases(n: int, d: int, panel: int, seed: int, max_degree: int) -> list[Case]:
    out = []
    for lam in enumerate_lambda(n, d):
        for j in _colours(n):
            if not _valid(n, d, lam, ((j, UP),)):
                continue
            for i in _colours(n):
                forms = (0,) if i == j else (0, 1)
                for clockwise in (True, False):
                    for form in forms:
                        for m in range(max_degree // 2 + 1):
                            name = f"{'cw' if clockwise else 'ccw'}-{form}"
                            out.append(
                                _case(
                                    "bubble-slides", name, check_bubble_slide,
                                    (n, d, lam, i, j, clockwise, m, form, panel, seed),
                                    n=n, d=d, lam=lam, i=i, j=j, m=m,
                                )
                            )
    return out


RELATION_FAMILIES: dict[str, Callable[[int, int, int, int, int], list[Case]]] = {
    "biadjoint": biadjoint_cases,
    "cyclic": cyclic_cases,
    "sideways": sideways_cases,
    "bubbles": bubble_cases,
    "curls": curl_cases,
    "EF": ef_cases,
    "nilhecke": nilhecke_cases,
    "mixed": mixed_cases,
    "r3": r3_cases,
    "bubble-slides": bubble_slide_cases,
}
