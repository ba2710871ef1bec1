"""Soergel relation suite, box polynomial checks and the generator oracle."""

from ..errors import DomainError
from ..polysym import format_poly
from ..report import CheckResult, Report, RunConfig
from ..runner import Case, run_cases
from .oracle import oracle_check
from .relations import SOERGEL_FAMILIES, box_samples
from .sigma import box_normalize
from .words import max_colour


def soergel_relation_suite(config: RunConfig, verbose: bool = False) -> Report:
    """Every selected Soergel relation family, pushed into S(n,d) and evaluated."""
    if config.d > config.n:
        raise DomainError(f"the Soergel functor needs d <= n, got n={config.n}, d={config.d}")
    unknown = [f for f in config.families if f not in SOERGEL_FAMILIES]
    if unknown:
        raise DomainError(f"unknown Soergel families: {', '.join(unknown)}")
    cases: list[Case] = []
    for family, generate in SOERGEL_FAMILIES.items():
        if config.selects(family):
            cases.extend(generate(config.n, config.d, config.panel_size, config.seed, config.max_degree))
    return Report("soergel-check", tuple(run_cases(cases, config.jobs, verbose)))


def box_normalize_check(n: int, d: int) -> Report:
    """f = P_i(f) + x_i d_i f with P_i(f) symmetric and P_i idempotent, on sample monomials."""
    results = []
    if d >= n:
        return Report("box-normalize")
    for i in range(1, max_colour(n, d) + 1):
        for k, f in enumerate(box_samples(d)):
            symmetric, partial = box_normalize(f, i)
            again, rest = box_normalize(symmetric, i)
            x = f.ring.gens[i - 1]
            witness = None
            if symmetric + x * partial != f:
                witness = f"{format_poly(f)} does not split"
            elif again != symmetric or rest:
                witness = f"P_{i} is not idempotent on {format_poly(f)}"
            results.append(
                CheckResult(
                    case_id=f"box-normalize/{i}/{k}",
                    relation_id="box-normalize",
                    parameters={"n": n, "d": d, "i": i, "f": format_poly(f)},
                    status="pass" if witness is None else "fail",
                    witness=witness,
                )
            )
    return Report("box-normalize", tuple(results))


def soergel_check(config: RunConfig, oracle: bool = True, verbose: bool = False) -> Report:
    """The relation suite plus, unless switched off, the polynomial and oracle checks."""
    report = soergel_relation_suite(config, verbose)
    if oracle and not config.families:
        report = report.merged(box_normalize_check(config.n, config.d))
        report = report.merged(oracle_check(config.n, config.d))
    return report
