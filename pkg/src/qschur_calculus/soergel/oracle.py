"""
Direct Soergel bimodule maps for single generators, on the localised model.

On the image of a Soergel object every pair (i,-),(i,+) either moves the same
variable twice or swaps the variables of strands i and i+1, so elements are
functions of these e/s patterns. With x = -z, alpha_i = x_i - x_(i+1) is
z_v - z_u for u on strand i and v on strand i+1 left of the pair.
"""

from itertools import product

from sympy.polys.rings import PolyElement

from ..bimrep.evaluate import eval_sum
from ..bimrep.section import BimElement, Path, Section, add, clean, equal, scale, section
from ..errors import DomainError
from ..polysym import format_poly
from ..report import CheckResult, Report
from .sigma import base_weight, sigma, sigma_letters
from .words import (
    SoergelAtom,
    SoergelSlice,
    SoergelWord,
    box,
    end_dot,
    four,
    line,
    max_colour,
    merge,
    six,
    split,
    start_dot,
)


def _pair_variables(sec: Section, path: Path, letter: int, colour: int) -> tuple[int, int]:
    """(u, v): the variables on strands ``colour`` and ``colour + 1`` left of ``letter``."""
    strands = sec.strands_at(path, letter)
    (u,) = strands[colour - 1]
    (v,) = strands[colour]
    return u, v


def _pair(u: int, v: int, same: bool) -> tuple[int, int]:
    return (v, v) if same else (v, u)


def _six_value(
    sec: Section, path: Path, o: int, colours: tuple[int, int], f: BimElement
) -> PolyElement:
    """
    The six-valent vertex projects onto the summand of the longest element and
    includes it back. When a single (x,y,x) pattern ends where the path does,
    its value is copied. The two endpoints that two patterns reach are
    interpolated between the variables of the three strands.
    """
    x, y = colours
    zero = sec.ring.zero
    z = sec.z
    start = sec.strands_at(path, o)
    end = sec.strands_at(path, o + 6)
    head, tail = path[:o], path[o + 6 :]
    matches: dict[tuple[bool, ...], Path] = {}
    for swaps in product((False, True), repeat=3):
        strands = list(start)
        pairs: tuple[int, ...] = ()
        for c, swap in zip((x, y, x), swaps, strict=True):
            (u,) = strands[c - 1]
            (v,) = strands[c]
            pairs += _pair(u, v, not swap)
            if swap:
                strands[c - 1], strands[c] = (v,), (u,)
        if tuple(strands) == end:
            matches[swaps] = head + pairs + tail
    if len(matches) == 1:
        (only,) = matches.values()
        return f.get(only, zero)

    (shared,) = {x - 1, x} & {y - 1, y}
    (other,) = {x - 1, x} - {shared}
    (rest,) = {y - 1, y} - {shared}
    zs, zo, zr = (z[start[k][0]] for k in (shared, other, rest))
    if (False, False, False) in matches:
        first, second = matches[(False, False, False)], matches[(True, False, True)]
        numerator = (zo - zr) * f.get(first, zero) + (zr - zs) * f.get(second, zero)
    else:
        first, second = matches[(True, False, False)], matches[(False, False, True)]
        numerator = (zr - zs) * f.get(first, zero) + (zo - zr) * f.get(second, zero)
    return numerator.exquo(zo - zs) if numerator else zero


def oracle_map(
    atom: SoergelAtom, pos: int, colours: tuple[int, ...], n: int, d: int, f: BimElement
) -> BimElement:
    """The bimodule map of ``atom`` at strand ``pos`` of the object ``colours``."""
    lam = base_weight(n, d)
    top = (*colours[:pos], *atom.top, *colours[pos + len(atom.bottom) :])
    target = section(n, d, lam, sigma_letters(top))
    o = 2 * pos
    i = atom.colours[0]
    z = target.z
    zero = target.ring.zero
    out: BimElement = {}
    for path in target.paths:
        head, tail = path[:o], path[o + 2 * len(atom.top) :]
        if atom.kind == "startDot":
            u, v = _pair_variables(target, path, o, i)
            if path[o] != path[o + 1]:
                continue
            value = (z[v] - z[u]) * f.get(head + tail, zero)
        elif atom.kind == "endDot":
            u, v = _pair_variables(target, path, o, i)
            value = f.get(head + _pair(u, v, True) + tail, zero)
        elif atom.kind == "merge":
            u, v = _pair_variables(target, path, o, i)
            same = path[o] == path[o + 1]
            first = head + _pair(u, v, True)
            swapped = head + _pair(u, v, False)
            if same:
                hi = first + _pair(u, v, True) + tail
                lo = swapped + _pair(v, u, False) + tail
            else:
                hi = first + _pair(u, v, False) + tail
                lo = swapped + _pair(v, u, True) + tail
            numerator = f.get(hi, zero) - f.get(lo, zero)
            value = numerator.exquo(z[v] - z[u]) if numerator else zero
        elif atom.kind == "split":
            u, v = _pair_variables(target, path, o, i)
            outer = path[o] == path[o + 1]
            inner = path[o + 2] == path[o + 3]
            value = f.get(head + _pair(u, v, outer == inner) + tail, zero)
        elif atom.kind == "six":
            value = _six_value(target, path, o, atom.colours, f)
        elif atom.kind == "four":
            value = f.get(head + path[o + 2 : o + 4] + path[o : o + 2] + tail, zero)
        elif atom.kind == "box":
            (u,) = target.strands_at(path, o)[i - 1]
            value = -z[u] * f.get(path, zero)
        else:
            raise DomainError(f"no direct map for {atom.kind}")
        if value:
            out[path] = value
    return clean(out)


def _generators(n: int, d: int) -> list[tuple[SoergelAtom, tuple[int, ...]]]:
    """Each generator with the smallest object it acts on."""
    top = max_colour(n, d)
    colours = range(1, top + 1)
    out: list[tuple[SoergelAtom, tuple[int, ...]]] = []
    for i in colours:
        out += [(start_dot(i), ()), (end_dot(i), (i,)), (merge(i), (i, i)), (split(i), (i,))]
        for j in colours:
            if abs(i - j) > 1:
                out.append((four(i, j), (i, j)))
            elif abs(i - j) == 1:
                out.append((six(i, j), (i, j, i)))
    if d < n:
        out += [(box(k), ()) for k in range(1, d + 1)]
    return out


def _contexts(n: int, d: int, bottom: tuple[int, ...]) -> list[tuple[int, tuple[int, ...]]]:
    """The bare object, plus a strand of colour 1 on either side when one exists."""
    out = [(0, bottom)]
    if max_colour(n, d) >= 1:
        out += [(1, (1, *bottom)), (0, (*bottom, 1))]
    return out


def _sigma_map(atom: SoergelAtom, pos: int, colours: tuple[int, ...], n: int, d: int):
    word = SoergelWord(n, d, colours, (_slice(atom, pos, colours),))
    return eval_sum(sigma(word))


def _slice(atom: SoergelAtom, pos: int, colours: tuple[int, ...]) -> SoergelSlice:
    return (
        *(line(c) for c in colours[:pos]),
        atom,
        *(line(c) for c in colours[pos + len(atom.bottom) :]),
    )


def oracle_witness(
    atom: SoergelAtom, pos: int, colours: tuple[int, ...], n: int, d: int
) -> str | None:
    """None when the image of ``atom`` agrees with its direct bimodule map."""
    m = _sigma_map(atom, pos, colours, n, d)
    if atom.kind in ("four", "six") and m.degree != 0:
        return f"degree {m.degree}, not 0"
    for (exponents, b), image in zip(m.source.basis, m.images, strict=True):
        expected = oracle_map(atom, pos, colours, n, d, b)
        if not equal(image, expected):
            diff = clean(add(image, scale(expected, -1)))
            path, value = next(iter(diff.items()))
            return f"basis {exponents}, path {path}: difference {format_poly(value)}"
    return None


def oracle_check(n: int, d: int) -> Report:
    """Each generator's image against its direct Soergel bimodule map."""
    results = []
    for atom, bottom in _generators(n, d):
        for pos, colours in _contexts(n, d, bottom):
            witness = oracle_witness(atom, pos, colours, n, d)
            tag = "".join(str(c) for c in colours) or "empty"
            results.append(
                CheckResult(
                    case_id=f"oracle/{atom}/{tag}@{pos}",
                    relation_id=f"oracle-{atom.kind}",
                    parameters={"n": n, "d": d, "colours": list(colours), "position": pos},
                    status="pass" if witness is None else "fail",
                    witness=witness,
                )
            )
    return Report("soergel-oracle", tuple(results))
