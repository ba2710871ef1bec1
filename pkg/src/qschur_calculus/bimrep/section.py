"""
Localised bimodules attached to the boundary of a diagram.

The variables z1..zd are dealt in blocks to the strands of the leftmost
region. Reading the boundary from left to right, a letter (i, +1) moves one
variable from strand i to strand i+1 and (i, -1) moves one from strand i+1
to strand i. A path records which variable moved at every letter, and an
element of the bimodule is a polynomial for each path.
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cache, cached_property
from itertools import product

from sympy.polys.rings import PolyElement, PolyRing

from ..diagrams.atoms import UP, Letter, add_weights, letter_weight
from ..polysym import Alphabet, polynomial_ring
from ..weights import Weight, in_lambda

Path = tuple[int, ...]
Strands = tuple[tuple[int, ...], ...]
BimElement = dict[Path, PolyElement]


@cache
def z_ring(d: int) -> tuple[PolyRing, tuple[PolyElement, ...]]:
    R, alph = polynomial_ring(z=d)
    return R, alph["z"].variables


def _move(strands: Strands, var: int, src: int, dst: int) -> Strands:
    out = list(strands)
    out[src] = tuple(v for v in strands[src] if v != var)
    out[dst] = tuple(sorted((*strands[dst], var)))
    return tuple(out)


def letter_strands(letter: Letter) -> tuple[int, int]:
    """(source strand, target strand) as 0-based indices."""
    colour, sign = letter
    return (colour - 1, colour) if sign == UP else (colour, colour - 1)


@dataclass(frozen=True)
class Section:
    """The localised bimodule of a boundary sequence with right region ``lam``."""

    n: int
    d: int
    lam: Weight
    letters: tuple[Letter, ...]

    @cached_property
    def ring(self) -> PolyRing:
        return z_ring(self.d)[0]

    @cached_property
    def z(self) -> tuple[PolyElement, ...]:
        return z_ring(self.d)[1]

    @cached_property
    def left(self) -> Weight:
        return add_weights(self.lam, letter_weight(self.letters, self.n))

    @cached_property
    def valid(self) -> bool:
        """Every region along the boundary lies in Lambda(n,d)."""
        current = self.left
        if not in_lambda(current, self.n, self.d):
            return False
        for letter in self.letters:
            current = add_weights(current, tuple(-x for x in letter_weight((letter,), self.n)))
            if not in_lambda(current, self.n, self.d):
                return False
        return True

    @cached_property
    def initial(self) -> Strands:
        strands = []
        start = 0
        for size in self.left:
            strands.append(tuple(range(start, start + size)))
            start += size
        return tuple(strands)

    @cached_property
    def paths(self) -> tuple[Path, ...]:
        if not self.valid:
            return ()
        out: list[Path] = []

        def walk(k: int, strands: Strands, acc: tuple[int, ...]) -> None:
            if k == len(self.letters):
                out.append(acc)
                return
            src, dst = letter_strands(self.letters[k])
            for v in strands[src]:
                walk(k + 1, _move(strands, v, src, dst), (*acc, v))

        walk(0, self.initial, ())
        return tuple(out)

    @cached_property
    def source_sizes(self) -> tuple[int, ...]:
        """Size of the strand each letter takes its variable from."""
        counts = list(self.left)
        sizes = []
        for letter in self.letters:
            src, dst = letter_strands(letter)
            sizes.append(counts[src])
            counts[src] -= 1
            counts[dst] += 1
        return tuple(sizes)

    @cached_property
    def shift(self) -> int:
        return sum(1 - s for s in self.source_sizes)

    def strands_at(self, path: Path, p: int) -> Strands:
        """Strand contents in the region left of letter ``p``."""
        strands = self.initial
        for k in range(p):
            src, dst = letter_strands(self.letters[k])
            strands = _move(strands, path[k], src, dst)
        return strands

    def alphabet(self, strand: Iterable[int]) -> Alphabet:
        return Alphabet(self.ring, tuple(self.z[v] for v in strand))

    def exponent_vectors(self) -> Iterator[tuple[int, ...]]:
        return product(*(range(s) for s in self.source_sizes))

    def monomial(self, exponents: tuple[int, ...]) -> BimElement:
        """The element prod_k X_k^{a_k}, X_k the variable moved at letter k."""
        out: BimElement = {}
        for path in self.paths:
            value = self.ring.one
            for var, a in zip(path, exponents, strict=True):
                if a:
                    value *= self.z[var] ** a
            out[path] = value
        return out

    @cached_property
    def basis(self) -> tuple[tuple[tuple[int, ...], BimElement], ...]:
        """Free basis over the symmetric polynomials of the leftmost region."""
        if not self.paths:
            return ()
        return tuple((a, self.monomial(a)) for a in self.exponent_vectors())

    def basis_degree(self, exponents: tuple[int, ...]) -> int:
        """Graded degree: 2 * polynomial degree plus the boundary shift."""
        return 2 * sum(exponents) + self.shift

    def one(self) -> BimElement:
        return {path: self.ring.one for path in self.paths}


@cache
def section(n: int, d: int, lam: Weight, letters: tuple[Letter, ...]) -> Section:
    return Section(n, d, tuple(lam), tuple(letters))


def clean(elem: BimElement) -> BimElement:
    return {path: value for path, value in elem.items() if value}


def add(a: BimElement, b: BimElement) -> BimElement:
    out = dict(a)
    for path, value in b.items():
        out[path] = out[path] + value if path in out else value
    return clean(out)


def scale(a: BimElement, c) -> BimElement:
    return clean({path: value * c for path, value in a.items()})


def equal(a: BimElement, b: BimElement) -> bool:
    return clean(a) == clean(b)


def poly_degree(elem: BimElement) -> int | None:
    """Common total degree of a homogeneous element, None for zero."""
    degrees = {
        sum(monom) for value in elem.values() for monom in value.keys()
    }
    if not degrees:
        return None
    if len(degrees) > 1:
        return -1
    return degrees.pop()
