"""Relation checks for the matrix model of S_q(n,d)."""

from fractions import Fraction
from functools import cache
from itertools import product
from math import comb

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from ..errors import DomainError
from ..report import CheckResult, Report
from ..scalars import LaurentQ, qint
from ..weights import (
    Weight,
    bar_i,
    enumerate_dominant,
    enumerate_lambda,
    in_lambda,
    lex_key,
    pad,
    shift,
)
from .matrices import (
    AlgebraWord,
    BlockMatrix,
    Letter,
    TensorBasis,
    combination_matrix,
    generator_matrix,
    hecke_generator,
    word_matrix,
)

SIGNS = (1, -1)


def _result(case_id: str, relation: str, ok: bool, witness: str, **params) -> CheckResult:
    return CheckResult(
        case_id=case_id,
        relation_id=relation,
        parameters=params,
        status="pass" if ok else "fail",
        witness=None if ok else witness,
    )


def _lam_str(lam: Weight) -> str:
    return "".join(str(x) for x in lam)


def check_schur_presentation(n: int, d: int) -> Report:
    """
    Checks the presentation of S_q(n,d) on matrices: idempotents, weight
    shifting, the EF commutator and the Serre relations.
    """
    if n < 2 or d < 1:
        raise DomainError(f"presentation check needs n >= 2 and d >= 1, got ({n}, {d})")
    results: list[CheckResult] = []
    colours = range(1, n)
    lambdas = enumerate_lambda(n, d)

    total = sum((BlockMatrix.idempotent(lam, n, d) for lam in lambdas), BlockMatrix.zero(n, d))
    dims = sum(TensorBasis(n, d).dim(lam) for lam in lambdas)
    results.append(
        _result(
            "idempotents/complete",
            "idempotents",
            total == BlockMatrix.identity(n, d) and dims == n**d,
            f"weight spaces cover {dims} of {n**d} basis vectors",
            n=n,
            d=d,
        )
    )
    for lam, mu in product(lambdas, repeat=2):
        prod = BlockMatrix.idempotent(lam, n, d) @ BlockMatrix.idempotent(mu, n, d)
        expected = BlockMatrix.idempotent(lam, n, d) if lam == mu else BlockMatrix.zero(n, d)
        if prod != expected:
            results.append(
                _result(
                    f"idempotents/orthogonal/{_lam_str(lam)}-{_lam_str(mu)}",
                    "idempotents",
                    False,
                    "1_lambda 1_mu is not delta 1_lambda",
                )
            )

    for i, sign in product(colours, SIGNS):
        gen = generator_matrix(i, sign, n, d)
        bad = [key for key in gen.blocks if key[0] != shift(key[1], i, sign)]
        results.append(
            _result(
                f"shift/{i}/{'+' if sign == 1 else '-'}",
                "weight-shift",
                not bad,
                f"blocks off the shifted weight: {bad}",
                i=i,
                sign=sign,
            )
        )

    for lam in lambdas:
        for i, j in product(colours, repeat=2):
            lhs = commutator_matrix(i, j, lam, n, d)
            rhs = BlockMatrix.idempotent(lam, n, d).scale(qint(bar_i(lam, i))) if i == j else BlockMatrix.zero(n, d)
            results.append(
                _result(
                    f"commutator/{_lam_str(lam)}/{i}-{j}",
                    "commutator",
                    lhs == rhs,
                    f"E_{i}E_-{j} - E_-{j}E_{i} differs from the expected scalar at {lam}",
                    lam=list(lam),
                    i=i,
                    j=j,
                )
            )
        for i, j, sign in product(colours, colours, SIGNS):
            if i == j:
                continue
            ok = serre_matrix(i, j, sign, lam, n, d).is_zero()
            kind = "serre" if abs(i - j) == 1 else "far-commutation"
            results.append(
                _result(
                    f"{kind}/{_lam_str(lam)}/{i}-{j}/{'+' if sign == 1 else '-'}",
                    kind,
                    ok,
                    f"relation fails for colours ({i}, {j}) at {lam}",
                    lam=list(lam),
                    i=i,
                    j=j,
                    sign=sign,
                )
            )
    return Report("check-presentation", tuple(results))


def commutator_matrix(i: int, j: int, lam: Weight, n: int, d: int) -> BlockMatrix:
    ef = AlgebraWord.of(lam, (i, 1), (j, -1))
    fe = AlgebraWord.of(lam, (j, -1), (i, 1))
    return word_matrix(ef, n, d) - word_matrix(fe, n, d)


def serre_terms(i: int, j: int, sign: int, lam: Weight) -> list[AlgebraWord]:
    """Words whose sum must vanish for colours i != j of one sign."""
    a, b = (i, sign), (j, sign)
    if abs(i - j) == 1:
        return [
            AlgebraWord.of(lam, a, a, b),
            AlgebraWord.of(lam, a, b, a, scalar=-qint(2)),
            AlgebraWord.of(lam, b, a, a),
        ]
    return [AlgebraWord.of(lam, a, b), AlgebraWord.of(lam, b, a, scalar=-1)]


def serre_matrix(i: int, j: int, sign: int, lam: Weight, n: int, d: int) -> BlockMatrix:
    return combination_matrix(serre_terms(i, j, sign, lam), n, d)


def check_hecke(d: int, n: int | None = None) -> Report:
    """Quadratic, braid and far-commutation relations of H_q(d) on V^{(x)d}."""
    n = d if n is None else n
    results: list[CheckResult] = []
    q2 = LaurentQ.q_power(2)
    ident = BlockMatrix.identity(n, d)
    gens = {i: hecke_generator(i, d, n) for i in range(1, d)}
    for i, t in gens.items():
        lhs = t @ t
        rhs = t.scale(q2 - 1) + ident.scale(q2)
        results.append(
            _result(f"hecke/quadratic/{i}", "hecke-quadratic", lhs == rhs, f"T_{i}^2", i=i, d=d)
        )
    for i, j in product(gens, repeat=2):
        if j == i + 1:
            lhs = gens[i] @ gens[j] @ gens[i]
            rhs = gens[j] @ gens[i] @ gens[j]
            results.append(
                _result(f"hecke/braid/{i}-{j}", "hecke-braid", lhs == rhs, f"T_{i}T_{j}T_{i}", i=i, j=j)
            )
        elif abs(i - j) > 1:
            ok = gens[i] @ gens[j] == gens[j] @ gens[i]
            results.append(
                _result(f"hecke/far/{i}-{j}", "hecke-far", ok, f"T_{i}T_{j}", i=i, j=j)
            )
    return Report("hecke-check", tuple(results))


def hecke_b(i: int, d: int, n: int) -> BlockMatrix:
    """b_i = q^{-1}(T_i + 1)."""
    t = hecke_generator(i, d, n)
    return (t + BlockMatrix.identity(n, d)).scale(LaurentQ.q_power(-1))


def sigma_check(n: int, d: int) -> Report:
    """
    b_i on the (1^d) block equals 1_d E_{-i} E_{+i} 1_d, and every Hecke
    generator commutes with every quantum group generator.
    """
    if d > n:
        raise DomainError(f"sigma check needs d <= n, got n={n}, d={d}")
    results: list[CheckResult] = []
    ones = (1,) * d + (0,) * (n - d)
    for i in range(1, d):
        lhs = hecke_b(i, d, n).restrict(ones)
        rhs = word_matrix(AlgebraWord.of(ones, (i, -1), (i, 1)), n, d)
        results.append(
            _result(f"sigma/b/{i}", "sigma", lhs == rhs, f"b_{i} on (1^{d})", i=i)
        )
    results.extend(hecke_commutation(n, d).results)
    return Report("sigma-check", tuple(results))


def hecke_commutation(n: int, d: int) -> Report:
    results: list[CheckResult] = []
    for k in range(1, d):
        t = hecke_generator(k, d, n)
        for i, sign in product(range(1, n), SIGNS):
            g = generator_matrix(i, sign, n, d)
            results.append(
                _result(
                    f"commute/T{k}/{i}/{'+' if sign == 1 else '-'}",
                    "schur-weyl",
                    t @ g == g @ t,
                    f"T_{k} does not commute with E_{'+' if sign == 1 else '-'}{i}",
                    k=k,
                    i=i,
                    sign=sign,
                )
            )
    return Report("hecke-commutation", tuple(results))


def tau(w: AlgebraWord) -> AlgebraWord:
    """
    The anti-involution: reverse the word, swap E_{+i} and E_{-i}, and
    multiply by q^{-1-bar(nu)_i} for each E_{+i} 1_nu and q^{bar(nu)_i - 1} for
    each E_{-i} 1_nu.
    """
    weights = w.weights()
    scalar = w.scalar
    for step, (colour, sign) in enumerate(reversed(w.letters)):
        nu = weights[step]
        exponent = -1 - bar_i(nu, colour) if sign == 1 else bar_i(nu, colour) - 1
        scalar = scalar * LaurentQ.q_power(exponent)
    letters = tuple((colour, -sign) for colour, sign in reversed(w.letters))
    return AlgebraWord(letters, w.target, scalar)


def _short_words(n: int, lam: Weight, max_len: int) -> list[AlgebraWord]:
    letters: list[Letter] = [(i, s) for i in range(1, n) for s in SIGNS]
    return [
        AlgebraWord(combo, lam)
        for length in range(max_len + 1)
        for combo in product(letters, repeat=length)
    ]


def tau_check(n: int, d: int) -> Report:
    """
    tau reverses products, squares to the identity, and maps the commutator and
    Serre relations to relations that still hold on matrices.
    """
    results: list[CheckResult] = []
    letters: list[Letter] = [(i, s) for i in range(1, n) for s in SIGNS]
    for lam in enumerate_lambda(n, d):
        tag = _lam_str(lam)
        for x in letters:
            w1 = AlgebraWord.of(lam, x)
            for y in letters:
                w2 = AlgebraWord.of(w1.target, y)
                lhs = word_matrix(tau(w1.then(w2)), n, d)
                rhs = word_matrix(tau(w1), n, d) @ word_matrix(tau(w2), n, d)
                results.append(
                    _result(
                        f"tau/anti/{tag}/{x[0]}{x[1]:+d}/{y[0]}{y[1]:+d}",
                        "tau-anti-homomorphism",
                        lhs == rhs,
                        f"tau({w2}{w1}) != tau({w1})tau({w2})",
                        lam=list(lam),
                    )
                )
        for w in _short_words(n, lam, 2):
            results.append(
                _result(
                    f"tau/involution/{tag}/{w}",
                    "tau-involution",
                    tau(tau(w)) == w,
                    f"tau(tau({w})) = {tau(tau(w))}",
                    lam=list(lam),
                )
            )
        for i, j in product(range(1, n), repeat=2):
            ef = tau(AlgebraWord.of(lam, (i, 1), (j, -1)))
            fe = tau(AlgebraWord.of(lam, (j, -1), (i, 1)))
            lhs = word_matrix(ef, n, d) - word_matrix(fe, n, d)
            rhs = (
                BlockMatrix.idempotent(lam, n, d).scale(qint(bar_i(lam, i)))
                if i == j
                else BlockMatrix.zero(n, d)
            )
            results.append(
                _result(
                    f"tau/commutator/{tag}/{i}-{j}",
                    "tau-relations",
                    lhs == rhs,
                    "tau image of the commutator relation fails",
                    lam=list(lam),
                )
            )
            if i == j:
                continue
            for sign in SIGNS:
                image = [tau(t) for t in serre_terms(i, j, sign, lam)]
                results.append(
                    _result(
                        f"tau/serre/{tag}/{i}-{j}/{'+' if sign == 1 else '-'}",
                        "tau-relations",
                        combination_matrix(image, n, d).is_zero(),
                        "tau image of a Serre relation fails",
                        lam=list(lam),
                    )
                )
    return Report("tau-check", tuple(results))


def pi_project(w: AlgebraWord, d_big: int, d: int) -> AlgebraWord:
    """Relabel 1_lambda -> 1_{lambda - (k^n)} where d_big = d + n k."""
    n = len(w.source)
    k, rem = divmod(d_big - d, n)
    if rem or k < 0:
        raise DomainError(f"{d_big} - {d} is not a non-negative multiple of n={n}")
    return AlgebraWord(w.letters, tuple(x - k for x in w.source), w.scalar)


def iota_embed(w: AlgebraWord, n: int, m: int) -> AlgebraWord:
    """Zero-pad the labels of a word of S(n,d) into S(m,d)."""
    if m < n:
        raise DomainError(f"cannot embed S({n},d) into S({m},d)")
    return AlgebraWord(w.letters, pad(w.source, m), w.scalar)


def pi_check(n: int, d: int, k: int = 1) -> Report:
    """
    pi_{d+nk,d}: projected words vanish exactly when a projected label leaves
    Lambda(n,d), and commutator scalars survive the projection.
    """
    d_big = d + n * k
    results: list[CheckResult] = []
    for lam_big in enumerate_lambda(n, d_big):
        for w in _short_words(n, lam_big, 2):
            if w.is_zero_by_label(n, d_big):
                continue
            projected = pi_project(w, d_big, d)
            vanishes = word_matrix(projected, n, d).is_zero()
            by_label = projected.is_zero_by_label(n, d)
            # single generators vanish exactly by label; longer words at least by label
            consistent = vanishes == by_label if len(w.letters) <= 1 else vanishes or not by_label
            if not consistent:
                results.append(
                    _result(
                        f"pi/labels/{_lam_str(lam_big)}/{w}",
                        "pi-labels",
                        False,
                        f"projected word {projected} vanishes={vanishes}, by label={by_label}",
                    )
                )
        lam = tuple(x - k for x in lam_big)
        if not in_lambda(lam, n, d):
            continue
        for i in range(1, n):
            lhs = commutator_matrix(i, i, lam, n, d)
            rhs = BlockMatrix.idempotent(lam, n, d).scale(qint(bar_i(lam_big, i)))
            results.append(
                _result(
                    f"pi/commutator/{_lam_str(lam_big)}/{i}",
                    "pi-commutator",
                    lhs == rhs,
                    "commutator scalar changes under projection",
                    lam=list(lam_big),
                    i=i,
                )
            )
    return Report("pi-check", tuple(results))


def iota_check(n: int, m: int, d: int) -> Report:
    """iota_{n,m}: the embedded generators satisfy the commutator relations in S(m,d)."""
    results: list[CheckResult] = []
    for lam in enumerate_lambda(n, d):
        for i, j in product(range(1, n), repeat=2):
            ef = iota_embed(AlgebraWord.of(lam, (i, 1), (j, -1)), n, m)
            fe = iota_embed(AlgebraWord.of(lam, (j, -1), (i, 1)), n, m)
            lhs = word_matrix(ef, m, d) - word_matrix(fe, m, d)
            big = pad(lam, m)
            rhs = (
                BlockMatrix.idempotent(big, m, d).scale(qint(bar_i(lam, i)))
                if i == j
                else BlockMatrix.zero(m, d)
            )
            results.append(
                _result(
                    f"iota/{_lam_str(lam)}/{i}-{j}",
                    "iota-commutator",
                    lhs == rhs,
                    "embedded commutator fails",
                    lam=list(lam),
                    i=i,
                    j=j,
                )
            )
    return Report("iota-check", tuple(results))


@cache
def ssyt_count(shape: Weight, n: int) -> int:
    """Semistandard tableaux of a shape with entries <= n (strip removal)."""
    shape = tuple(x for x in shape if x)
    if not shape:
        return 1
    if n == 0 or len(shape) > n:
        return 0
    total = 0
    # remove a horizontal strip of n's: shape[j+1] <= inner[j] <= shape[j]
    ranges = [
        range(shape[j + 1] if j + 1 < len(shape) else 0, shape[j] + 1)
        for j in range(len(shape))
    ]
    for inner in product(*ranges):
        total += ssyt_count(tuple(inner), n - 1)
    return total


def schur_dimension(n: int, d: int) -> int:
    """dim S_q(n,d) by the binomial count and by the sum of squared SSYT counts."""
    if n < 1 or d < 0:
        raise DomainError(f"need n >= 1 and d >= 0, got ({n}, {d})")
    binomial = comb(n * n + d - 1, d)
    tableaux = sum(ssyt_count(lam, n) ** 2 for lam in enumerate_dominant(n, d))
    if binomial != tableaux:
        raise RuntimeError(
            f"dimension routes disagree at ({n}, {d}): {binomial} != {tableaux}"
        )
    return binomial


def _vector(matrix: BlockMatrix, lam: Weight, q_value: int) -> list[Fraction]:
    out: list[Fraction] = []
    for mu in enumerate_lambda(matrix.n, matrix.d):
        for row in matrix.block(mu, lam):
            out.extend(v.specialize(q_value) for v in row)
    return out


def _rank(vectors: list[list[Fraction]]) -> int:
    if not vectors:
        return 0
    rows = [[QQ(v.numerator, v.denominator) for v in vec] for vec in vectors]
    return DomainMatrix(rows, (len(rows), len(rows[0])), QQ).rank()


def weyl_quotient_dimension(
    n: int, d: int, lam: Weight, q_values: tuple[int, ...] = (2, 3, 5), max_len: int | None = None
) -> int:
    """
    dim of S(n,d)1_lambda modulo the ideal spanned by words passing through a
    weight lexicographically above lambda, at rational specialisations of q.
    """
    if not in_lambda(lam, n, d):
        raise DomainError(f"{lam} is not in Lambda({n},{d})")
    max_len = 2 * d + 2 if max_len is None else max_len
    words = [w for w in _short_words(n, lam, max_len) if not w.is_zero_by_label(n, d)]
    column_rank = 0
    ideal_rank = 0
    for q_value in q_values:
        column: list[list[Fraction]] = []
        ideal: list[list[Fraction]] = []
        for w in words:
            vec = _vector(word_matrix(w, n, d), lam, q_value)
            column.append(vec)
            if any(lex_key(mu) > lex_key(lam) for mu in w.weights()):
                ideal.append(vec)
        column_rank = max(column_rank, _rank(column))
        ideal_rank = max(ideal_rank, _rank(ideal))
    return column_rank - ideal_rank
