"""
Bubble values.

A bubble of colour i acts by multiplication with a supersymmetric polynomial
in the alphabets T and U of strands i and i+1 of its outside region. Indexing
by the degree k = deg/2, the clockwise value is (-1)^b h_k(T - U) and the
counterclockwise one (-1)^(b+1) h_k(U - T), where b = |U|.
"""

from functools import cache

from sympy.polys.rings import PolyElement

from ..errors import AlphabetSizeError, DomainError
from ..polysym import Alphabet, det, format_poly
from ..report import CheckResult, Report
from ..supersym import (
    SuperPair,
    conjugate,
    in_gamma,
    lr_expand,
    super_elem,
    super_schur,
)
from ..weights import Weight, enumerate_lambda, in_lambda, partitions
from .section import Section, Strands, section


def degree_index(clockwise: bool, r: int, lam_bar: int) -> int:
    """Half the degree of a bubble carrying label ``r``."""
    return r - lam_bar + 1 if clockwise else r + lam_bar + 1


def label_of(clockwise: bool, k: int, lam_bar: int) -> int:
    return k + lam_bar - 1 if clockwise else k - lam_bar - 1


def closed_form(clockwise: bool, k: int, T: Alphabet, U: Alphabet) -> PolyElement:
    b = len(U)
    if clockwise:
        return (-1) ** b * super_elem(k, SuperPair(T, U))
    return (-1) ** (b + 1) * super_elem(k, SuperPair(U, T))


@cache
def bubble_by_index(clockwise: bool, k: int, T: Alphabet, U: Alphabet) -> PolyElement:
    """
    Real bubbles (label >= 0) take the closed form; fake ones are solved from
    sum_j ccw_j cw_(k-j) = -delta_(k,0) degree by degree.
    """
    R = T.ring
    if k < 0:
        return R.zero
    lam_bar = len(T) - len(U)
    if k == 0 or label_of(clockwise, k, lam_bar) >= 0:
        return closed_form(clockwise, k, T, U)
    other_zero = bubble_by_index(not clockwise, 0, T, U)
    total = R.zero
    for j in range(1, k + 1):
        total += bubble_by_index(not clockwise, j, T, U) * bubble_by_index(clockwise, k - j, T, U)
    # other_zero is +1 or -1
    return -total * other_zero


def bubble_poly(clockwise: bool, r: int, i: int, strands: Strands, sec: Section) -> PolyElement:
    """Value of the colour-i bubble with label r in a region with the given strands."""
    T = sec.alphabet(strands[i - 1])
    U = sec.alphabet(strands[i])
    k = degree_index(clockwise, r, len(T) - len(U))
    return bubble_by_index(clockwise, k, T, U)


def _region_section(lam: Weight, n: int, d: int) -> Section:
    if not in_lambda(lam, n, d):
        raise DomainError(f"{lam} is not in Lambda({n},{d})")
    return section(n, d, tuple(lam), ())


def bubble_value(clockwise: bool, r: int, i: int, lam: Weight, d: int) -> PolyElement:
    """The bubble at region ``lam`` on the standard variable blocks z1..zd."""
    n = len(lam)
    if not 1 <= i <= n - 1:
        raise DomainError(f"colour {i} outside 1..{n - 1}")
    sec = _region_section(lam, n, d)
    return bubble_poly(clockwise, r, i, sec.initial, sec)


def thick_bubble(
    clockwise: bool, m: int, partition: Weight, i: int, lam: Weight, d: int
) -> PolyElement:
    """Giambelli determinant det(bubble_{beta_j + l - j}) of single bubble values."""
    if m < 1:
        raise DomainError(f"thickness must be at least 1, got {m}")
    parts = [p for p in partition if p]
    if len(parts) > m:
        raise DomainError(f"{partition} has more than {m} parts")
    parts += [0] * (m - len(parts))
    n = len(lam)
    sec = _region_section(lam, n, d)
    T = sec.alphabet(sec.initial[i - 1])
    U = sec.alphabet(sec.initial[i])
    rows = [
        [bubble_by_index(clockwise, parts[j] + col - j, T, U) for col in range(m)]
        for j in range(m)
    ]
    return det(rows, sec.ring)


def _superschur_at(partition: Weight, lam: Weight, d: int) -> PolyElement:
    sec = _region_section(lam, len(lam), d)
    T, U = sec.alphabet(sec.initial[0]), sec.alphabet(sec.initial[1])
    return super_schur(partition, SuperPair(T, U))


def thick_bubble_check(
    max_m: int = 2, max_size: int = 3, max_total: int = 4, max_lr: int = 5
) -> Report:
    """
    Thick clockwise bubbles on Lambda(2,d) against (-1)^(m b) pi_beta(T, U),
    vanishing outside the (a,b) hook, the sign relating a clockwise bubble
    to the counterclockwise bubble of the conjugate partition, and
    Littlewood-Richardson multiplicativity for |alpha| + |beta| <= max_lr.
    Products whose super-Schur basis is degenerate are skipped as info.
    """
    results: list[CheckResult] = []

    def record(case_id: str, relation: str, ok: bool, witness: str, **params) -> None:
        results.append(
            CheckResult(
                case_id=case_id,
                relation_id=relation,
                parameters=params,
                status="pass" if ok else "fail",
                witness=None if ok else witness,
            )
        )

    shapes = [beta for size in range(max_size + 1) for beta in partitions(size)]
    lr_shapes = [beta for beta in shapes if beta and len(beta) <= max_m]
    for d in range(1, max_total + 1):
        for lam in enumerate_lambda(2, d):
            a, b = lam
            for m in range(1, max_m + 1):
                for beta in shapes:
                    if len(beta) > m:
                        continue
                    tag = f"{a}-{b}/m{m}/{''.join(map(str, beta)) or '0'}"
                    value = thick_bubble(True, m, beta, 1, lam, d)
                    expected = (-1) ** (m * b) * _superschur_at(beta, lam, d)
                    record(
                        f"thick-superschur/{tag}",
                        "thick-superschur",
                        value == expected,
                        f"{format_poly(value)} != {format_poly(expected)}",
                        lam=list(lam),
                        m=m,
                        partition=list(beta),
                    )
                    if not in_gamma(beta, a, b):
                        record(
                            f"thick-vanishing/{tag}",
                            "thick-vanishing",
                            not value,
                            format_poly(value),
                            lam=list(lam),
                            m=m,
                            partition=list(beta),
                        )
                    dual = conjugate(beta)
                    if len(dual) <= m:
                        other = thick_bubble(False, m, dual, 1, lam, d)
                        sign = (-1) ** (sum(beta) + m)
                        record(
                            f"thick-conjugate/{tag}",
                            "thick-conjugate",
                            value == sign * other,
                            f"{format_poly(value)} != {sign} * ({format_poly(other)})",
                            lam=list(lam),
                            m=m,
                            partition=list(beta),
                        )
            for alpha in lr_shapes:
                for beta in lr_shapes:
                    if sum(alpha) + sum(beta) <= max_lr:
                        results.append(_lr_result(alpha, beta, lam, d))
    return Report("thick-bubbles", tuple(results))


def _lr_result(alpha: Weight, beta: Weight, lam: Weight, d: int) -> CheckResult:
    sec = _region_section(lam, 2, d)
    T, U = sec.alphabet(sec.initial[0]), sec.alphabet(sec.initial[1])
    tag = f"{lam[0]}-{lam[1]}/{''.join(map(str, alpha))}x{''.join(map(str, beta))}"
    parameters = {"lam": list(lam), "alpha": list(alpha), "beta": list(beta)}
    try:
        coefficients = lr_expand(alpha, beta, SuperPair(T, U))
    except AlphabetSizeError as e:
        return CheckResult(f"thick-lr/{tag}", "thick-lr", parameters, "info", str(e))
    m_a, m_b = len(alpha), len(beta)
    lhs = thick_bubble(True, m_a, alpha, 1, lam, d) * thick_bubble(True, m_b, beta, 1, lam, d)
    rhs = sec.ring.zero
    for gamma, c in coefficients.items():
        rhs += c * thick_bubble(True, m_a + m_b, gamma, 1, lam, d)
    ok = lhs == rhs
    return CheckResult(
        case_id=f"thick-lr/{tag}",
        relation_id="thick-lr",
        parameters=parameters,
        status="pass" if ok else "fail",
        witness=None if ok else f"{format_poly(lhs)} != {format_poly(rhs)}",
    )
