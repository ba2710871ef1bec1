"""
Exact Laurent polynomials in q with rational coefficients.

A Laurent polynomial is stored as ``q^shift * p(q)`` with ``p`` an element of
the sympy ring ``QQ[q]`` whose constant term is non-zero, which makes the
representation unique.
"""

from collections.abc import Mapping
from fractions import Fraction
from functools import cache

from sympy.polys.domains import QQ
from sympy.polys.rings import PolyElement, ring

from .errors import DomainError

Scalar = int | Fraction

Q_RING, _q = ring("q", QQ)


def _to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


def _from_scalar(value: Scalar):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


class LaurentQ:
    """
    An immutable Laurent polynomial sum c_k q^k.

    Zero is the zero polynomial with shift 0.
    """

    __slots__ = ("_hash", "_poly", "_shift")

    def __init__(self, coeffs: Mapping[int, Scalar] | None = None):
        terms = {int(k): _from_scalar(v) for k, v in (coeffs or {}).items()}
        terms = {k: v for k, v in terms.items() if v}
        low = min(terms, default=0)
        self._poly = Q_RING({(k - low,): v for k, v in terms.items()})
        self._shift = low
        self._hash: int | None = None

    @classmethod
    def _wrap(cls, poly: PolyElement, shift: int) -> "LaurentQ":
        out = cls.__new__(cls)
        if not poly:
            shift = 0
        else:
            low = min(m[0] for m in poly.keys())
            if low:
                poly = poly.exquo(_q**low)
                shift += low
        out._poly = poly
        out._shift = shift
        out._hash = None
        return out

    @classmethod
    def constant(cls, value: Scalar) -> "LaurentQ":
        return cls({0: value})

    @classmethod
    def q_power(cls, k: int, coeff: Scalar = 1) -> "LaurentQ":
        return cls({k: coeff})

    @classmethod
    def coerce(cls, value: "LaurentQ | Scalar") -> "LaurentQ":
        if isinstance(value, LaurentQ):
            return value
        return cls.constant(value)

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return {m[0] + self._shift: _to_fraction(c) for m, c in self._poly.items()}

    def coefficient(self, exponent: int) -> Fraction:
        if exponent < self._shift:
            return Fraction(0)
        return _to_fraction(self._poly.coeff(_q ** (exponent - self._shift)))

    def is_zero(self) -> bool:
        return not self._poly

    def degree_range(self) -> tuple[int, int] | None:
        """(lowest, highest) exponent, or None for the zero polynomial."""
        if not self._poly:
            return None
        return self._shift, self._shift + self._poly.degree()

    def bar(self) -> "LaurentQ":
        """The bar involution q -> q^{-1}."""
        return LaurentQ({-k: v for k, v in self.coeffs.items()})

    def specialize(self, q_value: Scalar) -> Fraction:
        q_value = Fraction(q_value)
        if q_value == 0 and self._shift < 0:
            raise DomainError("cannot specialise a negative power of q at q=0")
        value = _to_fraction(self._poly(_from_scalar(q_value)))
        return value * q_value**self._shift if self._shift else value

    def __add__(self, other: "LaurentQ | Scalar") -> "LaurentQ":
        other = LaurentQ.coerce(other)
        if not other._poly:
            return self
        if not self._poly:
            return other
        low = min(self._shift, other._shift)
        poly = self._poly * _q ** (self._shift - low) + other._poly * _q ** (other._shift - low)
        return LaurentQ._wrap(poly, low)

    __radd__ = __add__

    def __neg__(self) -> "LaurentQ":
        return LaurentQ._wrap(-self._poly, self._shift)

    def __sub__(self, other: "LaurentQ | Scalar") -> "LaurentQ":
        return self + (-LaurentQ.coerce(other))

    def __rsub__(self, other: "LaurentQ | Scalar") -> "LaurentQ":
        return LaurentQ.coerce(other) - self

    def __mul__(self, other: "LaurentQ | Scalar") -> "LaurentQ":
        other = LaurentQ.coerce(other)
        return LaurentQ._wrap(self._poly * other._poly, self._shift + other._shift)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "LaurentQ":
        if exponent < 0:
            if len(self._poly) != 1:
                raise DomainError("only monomials have negative powers")
            c = self._poly.LC
            return LaurentQ._wrap(Q_RING(c**exponent), self._shift * exponent)
        return LaurentQ._wrap(self._poly**exponent, self._shift * exponent)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int | Fraction):
            other = LaurentQ.constant(other)
        if not isinstance(other, LaurentQ):
            return NotImplemented
        return self._shift == other._shift and self._poly == other._poly

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._shift, frozenset(self.coeffs.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._poly)

    def __repr__(self) -> str:
        return f"LaurentQ({self})"

    def __str__(self) -> str:
        coeffs = self.coeffs
        if not coeffs:
            return "0"
        parts = []
        for k in sorted(coeffs, reverse=True):
            v = coeffs[k]
            sign = "-" if v < 0 else "+"
            mag = abs(v)
            if k == 0:
                body = f"{mag}"
            elif mag == 1:
                body = f"q^{k}"
            else:
                body = f"{mag}*q^{k}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> dict[str, str]:
        return {str(k): str(v) for k, v in sorted(self.coeffs.items(), reverse=True)}


ZERO = LaurentQ()
ONE = LaurentQ.constant(1)
Q = LaurentQ.q_power(1)


@cache
def qint(a: int) -> LaurentQ:
    """Balanced quantum integer [a] = (q^a - q^-a)/(q - q^-1)."""
    if a < 0:
        return -qint(-a)
    return LaurentQ({a - 1 - 2 * k: 1 for k in range(a)})


@cache
def qfact(m: int) -> LaurentQ:
    if m < 0:
        raise DomainError(f"q-factorial of a negative integer: {m}")
    result = ONE
    for j in range(1, m + 1):
        result = result * qint(j)
    return result


@cache
def qbinom(m: int, k: int) -> LaurentQ:
    """
    Balanced q-binomial coefficient, via the recursion
    [m, k] = q^k [m-1, k] + q^(k-m) [m-1, k-1].
    """
    if m < 0 or k < 0:
        raise DomainError(f"q-binomial needs non-negative arguments, got ({m}, {k})")
    if k > m:
        raise DomainError(f"q-binomial [{m} choose {k}] needs k <= m")
    if k in (0, m):
        return ONE
    return LaurentQ.q_power(k) * qbinom(m - 1, k) + LaurentQ.q_power(k - m) * qbinom(
        m - 1, k - 1
    )
