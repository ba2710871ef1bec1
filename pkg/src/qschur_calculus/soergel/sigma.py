"""
The functor from Soergel diagrams to diagram words of S(n,d).

A strand of colour i becomes the pair F_i E_i, read as the letters (i,-),(i,+),
and every region of a Soergel diagram becomes the weight (1^d, 0^(n-d)).
Boxes only exist for d < n, where box i acts by a sum of bubbles.
"""

from fractions import Fraction
from functools import cache

from sympy.polys.rings import PolyElement, PolyRing

from ..diagrams.atoms import (
    DOWN,
    UP,
    Atom,
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
)
from ..diagrams.word import DiagramSum, DiagramWord, Step, extend_word
from ..errors import DomainError, ValidationError
from ..polysym import divided_diff, is_symmetric_in, polynomial_ring
from ..weights import Weight
from .words import SoergelAtom, SoergelSum, SoergelWord, as_soergel_sum, box, build_soergel

# (coefficient, sparse slices) for each term of an atom's image
Alternative = tuple[Fraction | int, list[list[Step]]]

FLIPPED_KIND = {
    "cupEF": "capEF",
    "capEF": "cupEF",
    "cupFE": "capFE",
    "capFE": "cupFE",
    "xUU": "xUU",
    "xDD": "xDD",
    "xLR": "xRL",
    "xRL": "xLR",
}


def base_weight(n: int, d: int) -> Weight:
    return (1,) * d + (0,) * (n - d)


def sigma_letters(colours: tuple[int, ...]) -> tuple[Letter, ...]:
    return tuple(letter for c in colours for letter in ((c, DOWN), (c, UP)))


def _four_steps(a: int, b: int) -> list[tuple[Atom, int]]:
    # [-a,+a,-b,+b] -> [-b,+b,-a,+a]
    return [(cross_lr(a, b), 1), (cross_dd(a, b), 0), (cross_uu(a, b), 2), (cross_rl(a, b), 1)]


def _six_steps_up(b: int, a: int) -> list[tuple[Atom, int]]:
    """[-b,+b,-a,+a,-b,+b] -> [-a,+a,-b,+b,-a,+a] for b = a + 1."""
    return [
        (cross_lr(b, a), 1),
        (cross_lr(a, b), 3),
        (cap_fe(b), 2),
        (cup_ef(a), 0),
        (cross_lr(a, b), 1),
        (cross_lr(a, a), 2),
        (cross_uu(a, a), 3),
        (cross_uu(a, b), 4),
        (cross_rl(a, a), 2),
        (cross_rl(b, a), 1),
        (cross_rl(a, b), 3),
    ]


def _flipped(steps: list[tuple[Atom, int]]) -> list[tuple[Atom, int]]:
    """The composite read top to bottom with every orientation reversed."""
    out = []
    for atom, pos in reversed(steps):
        colours = atom.colours if len(atom.colours) == 1 else atom.colours[::-1]
        out.append((Atom(FLIPPED_KIND[atom.kind], colours), pos))
    return out


def _six_steps(x: int, y: int) -> list[tuple[Atom, int]]:
    """six(x,y): (x,y,x) -> (y,x,y)."""
    if x == y + 1:
        return _six_steps_up(x, y)
    return _flipped(_six_steps_up(y, x))


def atom_image(atom: SoergelAtom, offset: int, n: int, d: int) -> list[Alternative]:
    """Terms of the image of one atom whose left edge sits at letter ``offset``."""
    kind = atom.kind
    i = atom.colours[0]
    o = offset
    if kind == "line":
        return [(1, [])]
    if kind == "startDot":
        return [(1, [[(cup_ef(i), o)]])]
    if kind == "endDot":
        return [(1, [[(cap_ef(i), o)]])]
    if kind == "merge":
        return [(1, [[(cap_fe(i), o + 1)]])]
    if kind == "split":
        return [(1, [[(cup_fe(i), o + 1)]])]
    if kind in ("four", "six"):
        steps = _four_steps(*atom.colours) if kind == "four" else _six_steps(*atom.colours)
        return [(1, [[(a, o + p)] for a, p in steps])]
    if kind == "box":
        if d >= n:
            raise DomainError("boxes only exist when d < n")
        out: list[Alternative] = [(1, [[(bubble(j, 0, False), o)]]) for j in range(i, d)]
        out.append((-1, [[(bubble(d, -1, False), o)]]))
        return out
    raise ValidationError(f"no image for {kind}")


def sigma(w: SoergelWord | SoergelSum) -> DiagramSum:
    """The diagram sum a Soergel word (or sum) maps to; boxes expand into bubble sums."""
    s = as_soergel_sum(w)
    lam = base_weight(s.n, s.d)
    out = DiagramSum(s.n, s.d, lam, sigma_letters(s.bottom), sigma_letters(s.top), ())
    for word in s.terms:
        out = out + _sigma_word(word, lam)
    return out


def _sigma_word(w: SoergelWord, lam: Weight) -> DiagramSum:
    terms = [DiagramWord.identity(w.n, w.d, lam, sigma_letters(w.bottom)).scaled(w.coeff)]
    for slc in w.slices:
        placed = []
        pos = 0
        for atom in slc:
            placed.append((atom, pos))
            pos += len(atom.bottom)
        # right to left, so the offsets of atoms further left stay valid
        for atom, pos in reversed(placed):
            if atom.kind == "line":
                continue
            alternatives = atom_image(atom, 2 * pos, w.n, w.d)
            terms = [
                extend_word(t, steps).scaled(c) for t in terms for c, steps in alternatives
            ]
    return DiagramSum.of(*terms)


# -- boxes -------------------------------------------------------------------


@cache
def box_ring(d: int) -> PolyRing:
    """Polynomials in the boxes 1..d, as variables x1..xd."""
    return polynomial_ring(x=d)[0]


def box_normalize(f: PolyElement, i: int) -> tuple[PolyElement, PolyElement]:
    """
    (P_i(f), d_i f) with d_i f = (f - s_i f)/(x_i - x_(i+1)) and
    P_i(f) = f - x_i d_i f, so that f = P_i(f) + x_i d_i f with P_i(f)
    symmetric in x_i, x_(i+1).
    """
    gens = f.ring.gens
    if not 1 <= i < len(gens):
        raise DomainError(f"box index {i} needs boxes {i} and {i + 1} among {len(gens)}")
    x, y = gens[i - 1], gens[i]
    partial = divided_diff(f, x, y)
    symmetric = f - x * partial
    if not is_symmetric_in(symmetric, x, y):
        raise ValidationError(f"P_{i} of {f} is not symmetric")
    return symmetric, partial


def box_polynomial(f: PolyElement, n: int, d: int, bottom: tuple[int, ...], pos: int) -> SoergelSum:
    """``f`` in the boxes, drawn in the region before strand ``pos``."""
    out = SoergelSum(n, d, tuple(bottom), tuple(bottom), ())
    for exponents, c in f.terms():
        steps = [[(box(k + 1), pos)] for k, e in enumerate(exponents) for _ in range(e)]
        coeff = Fraction(int(c.numerator), int(c.denominator))
        out = out + build_soergel(n, d, bottom, steps, coeff)
    return out
