"""Relation suite, generator coherence, functoriality and divided powers."""

import random
from collections.abc import Iterator
from math import prod

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import PolyElement
from sympy.utilities.iterables import multiset_permutations

from ..diagrams.atoms import (
    DOWN,
    UP,
    Atom,
    Letter,
    atom_degree,
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
    DiagramWord,
    build_word,
    compose_h,
    compose_v,
    divided_power_idempotent,
)
from ..errors import DomainError
from ..report import CheckResult, Report, RunConfig
from ..runner import Case, run_cases
from ..weights import Weight, bar_i, enumerate_lambda, partitions
from .bubbles import label_of
from .evaluate import apply_word, eval_diagram, first_difference
from .relations import RELATION_FAMILIES
from .section import BimElement, Section, equal, poly_degree, section


def relation_suite(config: RunConfig, verbose: bool = False) -> Report:
    """Every selected relation family at every weight of Lambda(n,d)."""
    unknown = [f for f in config.families if f not in RELATION_FAMILIES]
    if unknown:
        raise DomainError(f"unknown relation families: {', '.join(unknown)}")
    cases: list[Case] = []
    for family, generate in RELATION_FAMILIES.items():
        if config.selects(family):
            cases.extend(generate(config.n, config.d, config.panel_size, config.seed, config.max_degree))
    return Report("check-relations", tuple(run_cases(cases, config.jobs, verbose)))


# -- generator coherence -----------------------------------------------------


def _generators(n: int, lam: Weight) -> Iterator[tuple[Atom, tuple[Letter, ...]]]:
    colours = range(1, n)
    for i in colours:
        for r in (1, 2):
            yield dot_up(i, r), ((i, UP),)
            yield dot_down(i, r), ((i, DOWN),)
        yield cup_ef(i), ()
        yield cup_fe(i), ()
        yield cap_ef(i), ((i, DOWN), (i, UP))
        yield cap_fe(i), ((i, UP), (i, DOWN))
        lam_bar = bar_i(lam, i)
        for clockwise in (True, False):
            for k in range(3):
                yield bubble(i, label_of(clockwise, k, lam_bar), clockwise), ()
        for j in colours:
            yield cross_uu(i, j), ((i, UP), (j, UP))
            yield cross_dd(i, j), ((i, DOWN), (j, DOWN))
            yield cross_lr(i, j), ((i, UP), (j, DOWN))
            yield cross_rl(i, j), ((i, DOWN), (j, UP))


def _graded_degree(sec: Section, elem: BimElement) -> int | None:
    p = poly_degree(elem)
    if p is None or p < 0:
        return p
    return 2 * p + sec.shift


def coherence_witness(atom: Atom, w: DiagramWord) -> str | None:
    """The graded degree of every basis image is the basis degree plus the atom degree."""
    m = eval_diagram(w)
    expected_shift = atom_degree(atom, w.lam)
    for (exponents, _), image in zip(m.source.basis, m.images, strict=True):
        if not image:
            continue
        got = _graded_degree(m.target, image)
        want = m.source.basis_degree(exponents) + expected_shift
        if got != want:
            return f"basis {exponents}: image degree {got}, expected {want}"
    return None


def check_degree_coherence(n: int, d: int) -> Report:
    results = []
    for lam in enumerate_lambda(n, d):
        for atom, bottom in _generators(n, lam):
            if not section(n, d, lam, bottom).valid:
                continue
            w = build_word(n, d, lam, bottom, [[(atom, 0)]])
            witness = coherence_witness(atom, w)
            tag = "".join(map(str, lam))
            results.append(
                CheckResult(
                    case_id=f"coherence/{tag}/{atom}",
                    relation_id="degree-coherence",
                    parameters={"n": n, "d": d, "lam": list(lam), "atom": str(atom)},
                    status="pass" if witness is None else "fail",
                    witness=witness,
                )
            )
    return Report("degree-coherence", tuple(results))


# -- functoriality -----------------------------------------------------------


def _random_step(rng: random.Random, boundary: tuple[Letter, ...], n: int) -> tuple[Atom, int]:
    options: list[tuple[Atom, int]] = []
    for p, (c, s) in enumerate(boundary):
        options.append((dot_up(c) if s == UP else dot_down(c), p))
        if p + 1 < len(boundary):
            c2, s2 = boundary[p + 1]
            if s == UP and s2 == UP:
                options.append((cross_uu(c, c2), p))
            elif s == DOWN and s2 == DOWN:
                options.append((cross_dd(c, c2), p))
            elif s == UP:
                options.append((cross_lr(c, c2), p))
                if c == c2:
                    options.append((cap_fe(c), p))
            else:
                options.append((cross_rl(c, c2), p))
                if c == c2:
                    options.append((cap_ef(c), p))
    if len(boundary) < 3:
        for p in range(len(boundary) + 1):
            colour = rng.randint(1, n - 1)
            options.append((cup_ef(colour), p))
            options.append((cup_fe(colour), p))
    return rng.choice(options)


def _random_word(
    rng: random.Random, n: int, d: int, lam: Weight, bottom: tuple[Letter, ...], height: int
) -> DiagramWord:
    steps: list[list[tuple[Atom, int]]] = []
    top = bottom
    for _ in range(height):
        steps.append([_random_step(rng, top, n)])
        top = build_word(n, d, lam, bottom, steps).top
    return build_word(n, d, lam, bottom, steps)


def functoriality_witness(
    lower: DiagramWord, upper: DiagramWord, right: DiagramWord, panel_size: int = 3, seed: int = 0
) -> str | None:
    """
    Vertical composition is composition of maps, and side-by-side words obey
    the interchange law on the basis and on a random panel.
    """
    stacked = eval_diagram(compose_v(upper, lower))
    source = stacked.source
    for (exponents, b), image in zip(source.basis, stacked.images, strict=True):
        if not equal(apply_word(upper, apply_word(lower, b)), image):
            return f"vertical composite differs on basis {exponents}"

    beside = eval_diagram(compose_h(upper, right))
    left_first = compose_v(
        compose_h(upper, DiagramWord.identity(right.n, right.d, right.lam, right.top)),
        compose_h(DiagramWord.identity(upper.n, upper.d, upper.lam, upper.bottom), right),
    )
    diff = first_difference(beside, eval_diagram(left_first), panel_size, seed)
    if diff:
        return f"interchange law: {diff}"
    return None


def check_functoriality(n: int, d: int, seed: int = 0, samples: int = 12, panel_size: int = 3) -> Report:
    rng = random.Random(seed)
    results = []
    weights = enumerate_lambda(n, d)
    for k in range(samples):
        lam = rng.choice(weights)
        bottom: tuple[Letter, ...] = ((rng.randint(1, n - 1), rng.choice((UP, DOWN))),)
        lower = _random_word(rng, n, d, lam, bottom, 2)
        upper = _random_word(rng, n, d, lam, lower.top, 2)
        right = _random_word(rng, n, d, lam, (), 1)
        witness = functoriality_witness(lower, upper, right, panel_size, seed)
        results.append(
            CheckResult(
                case_id=f"functoriality/{k:03d}",
                relation_id="functoriality",
                parameters={"n": n, "d": d, "lam": list(lam), "seed": seed, "panel_size": panel_size},
                status="pass" if witness is None else "fail",
                witness=witness,
            )
        )
    return Report("functoriality", tuple(results))


# -- divided powers ----------------------------------------------------------


def _monomial_symmetric(variables: tuple[PolyElement, ...], shape: Weight, one: PolyElement) -> PolyElement:
    exponents = list(shape) + [0] * (len(variables) - len(shape))
    total = one * 0
    for perm in multiset_permutations(exponents):
        total += prod((v**e for v, e in zip(variables, perm, strict=True)), start=one)
    return total


def symmetric_pieces(sec: Section, degree: int) -> list[PolyElement]:
    """Monomial basis of the symmetric polynomials of the leftmost region in one degree."""
    blocks = [tuple(sec.z[v] for v in strand) for strand in sec.initial]
    one = sec.ring.one

    def split(k: int, remaining: int) -> Iterator[PolyElement]:
        if k == len(blocks):
            if remaining == 0:
                yield one
            return
        for e in range(remaining + 1):
            for shape in partitions(e, max_parts=len(blocks[k])):
                head = _monomial_symmetric(blocks[k], shape, one)
                for tail in split(k + 1, remaining - e):
                    yield head * tail

    return list(split(0, degree))


def _rank(vectors: list[BimElement]) -> int:
    keys = sorted({(path, monom) for v in vectors for path, value in v.items() for monom in value.keys()})
    if not keys or not vectors:
        return 0
    rows = [[v[path].get(monom, QQ.zero) if path in v else QQ.zero for v in vectors] for path, monom in keys]
    return DomainMatrix(rows, (len(keys), len(vectors)), QQ).rank()


def q_factorial_coefficients(m: int) -> list[int]:
    """Coefficients of prod_{j=1}^{m} (1 + t + ... + t^(j-1))."""
    coeffs = [1]
    for j in range(1, m + 1):
        out = [0] * (len(coeffs) + j - 1)
        for a, c in enumerate(coeffs):
            for b in range(j):
                out[a + b] += c
        coeffs = out
    return coeffs


def rank_profile(e: DiagramWord, max_degree: int) -> tuple[list[int], list[int]]:
    """Dimensions of the source module and of the image of ``e`` per polynomial degree."""
    m = eval_diagram(e)
    source = m.source
    module = []
    image = []
    for k in range(max_degree + 1):
        module.append(
            sum(len(symmetric_pieces(source, k - sum(a))) for a, _ in source.basis if sum(a) <= k)
        )
        vectors = [
            {path: s * value for path, value in img.items()}
            for (a, _), img in zip(source.basis, m.images, strict=True)
            if sum(a) <= k
            for s in symmetric_pieces(source, k - sum(a))
        ]
        image.append(_rank([v for v in vectors if v]))
    return module, image


def divided_power_check(
    i: int,
    sign: int,
    m: int,
    lam: Weight,
    n: int,
    d: int,
    max_degree: int = 6,
    panel_size: int = 3,
    seed: int = 0,
) -> Report:
    """
    Idempotency of the divided power idempotent, its vanishing threshold and
    the graded rank identity dim M_k = sum_l c_l dim img_(k - l + m(m-1)/2).
    """
    if not 1 <= m <= 3:
        raise DomainError(f"divided powers are checked for 1 <= m <= 3, got {m}")
    e = divided_power_idempotent(i, sign, m, lam, n, d)
    params = {"n": n, "d": d, "lam": list(lam), "i": i, "sign": sign, "m": m}
    tag = f"{'plus' if sign == UP else 'minus'}/{''.join(map(str, lam))}/i{i}/m{m}"
    results = []

    witness = first_difference(eval_diagram(compose_v(e, e)), eval_diagram(e), panel_size, seed)
    results.append(
        CheckResult(f"idempotent/{tag}", "idempotent", params, "pass" if witness is None else "fail", witness)
    )

    threshold = lam[i] if sign == UP else lam[i - 1]
    expect_zero = m > threshold
    is_zero = eval_diagram(e).is_zero
    ok = is_zero == expect_zero
    results.append(
        CheckResult(
            f"vanishing/{tag}",
            "vanishing",
            params,
            "pass" if ok else "fail",
            None if ok else f"zero={is_zero}, expected zero={expect_zero}",
        )
    )

    if not expect_zero:
        shift = m * (m - 1) // 2
        coeffs = q_factorial_coefficients(m)
        module, image = rank_profile(e, max_degree + shift)
        mismatches = []
        for k in range(max_degree + 1):
            predicted = sum(c * image[k - ell + shift] for ell, c in enumerate(coeffs) if k - ell + shift >= 0)
            if predicted != module[k]:
                mismatches.append(f"degree {k}: module {module[k]}, predicted {predicted}")
        if m == 2:
            status = "fail" if mismatches else "pass"
        else:
            status = "info"
        witness = "; ".join(mismatches) or None
        if status == "info":
            witness = f"module {module[: max_degree + 1]}, image {image}" + (f"; {witness}" if witness else "")
        results.append(CheckResult(f"rank/{tag}", "rank", params, status, witness))
    return Report("divided-powers", tuple(results))


def divided_power_suite(
    n: int, d: int, max_m: int = 2, max_degree: int = 6, panel_size: int = 3, seed: int = 0
) -> Report:
    report = Report("divided-powers")
    for lam in enumerate_lambda(n, d):
        for i in range(1, n):
            for sign in (UP, DOWN):
                for m in range(1, max_m + 1):
                    report = report.merged(
                        divided_power_check(i, sign, m, lam, n, d, max_degree, panel_size, seed)
                    )
    return report
