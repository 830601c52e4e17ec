"""Certified f(n) bounds: the per-n fixpoint driver and closed-form evaluators.

The driver enumerates candidate classes with m up to a moving budget,
excludes what it can, and takes mu = min e over the survivors.  The bound
eps(n) >= (1/sqrt(n)) * sqrt(1 - 1/(mu*n)) is certified once coverage holds,
i.e. once every class that could be abnormal at level mu (m < mu for k = 0,
m*(n-1) < mu for k != 0) has been enumerated and either excluded or seen to
have e >= mu.  f(n) = n*mu; larger is better.

The closed-form evaluators give weaker but formulaic f(n) values from the
case analysis on Delta = n - floor(sqrt(n))^2, plus the uniform-multiplicity
consequences f = 21(n-2), 42(n-2), (n^2 - 5n*sqrt(n))/2 and f = 21n.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Optional, Union

from .candidates import CandidateTriple, e_value, enumerate_szcor
from .effectivity import SpecializationConfig
from .exclusions import ExclusionDb, ExclusionResult, default_db, is_excluded
from .lattice import (
    DomainError,
    Q,
    QuadraticExpr,
    Rational,
    compare_values,
    is_square,
    sign_of,
)

BoundValue = Union[Fraction, QuadraticExpr]

DEFAULT_M_BUDGET_CAP = 5000


@dataclass(frozen=True)
class Coverage:
    """How far the candidate enumeration was pushed, per k-regime."""

    m_checked_k0: int
    m_checked_knz: int


@dataclass(frozen=True)
class BoundReport:
    """Certified bound for one n, with its exclusion certificate."""

    n: int
    f: Fraction
    mu: Fraction
    blocker: Optional[CandidateTriple]
    exclusions_used: tuple[tuple[CandidateTriple, str], ...]
    coverage: Coverage
    cfg: SpecializationConfig
    budget_limited: bool
    m_budget_cap: int


def compute_bound(
    n: int,
    db: Optional[ExclusionDb] = None,
    cfg: Optional[SpecializationConfig] = None,
    m_budget_cap: int = DEFAULT_M_BUDGET_CAP,
) -> BoundReport:
    """Run the fixpoint: enumerate, exclude, contract mu, grow m until covered.

    Candidates are walked in increasing e; the first one that cannot be
    excluded is the blocker and fixes mu.  If the enumeration budget is
    exhausted before coverage, the report is flagged budget_limited and f is
    computed from the largest covered level, min(mu, m_max + 1).
    """
    if n < 10:
        raise DomainError(f"bounds are computed for n >= 10, got {n}")
    if is_square(n):
        raise DomainError(f"n = {n} is a square: eps(n) = 1/sqrt(n) exactly, no f(n)")
    if m_budget_cap < 1:
        raise DomainError(f"m_budget_cap must be >= 1, got {m_budget_cap}")
    if db is None:
        db = default_db()
    if cfg is None:
        cfg = SpecializationConfig.default(n)

    verdicts: dict[CandidateTriple, ExclusionResult] = {}
    m_max = min(16, m_budget_cap)
    while True:
        cands = sorted(enumerate_szcor(n, m_max), key=lambda c: (e_value(c).e, c.sort_key()))
        excluded: list[tuple[CandidateTriple, str]] = []
        mu: Optional[Fraction] = None
        blocker: Optional[CandidateTriple] = None
        for c in cands:
            res = verdicts.get(c)
            if res is None:
                res = is_excluded(c, cfg, db)
                verdicts[c] = res
            if res.excluded:
                excluded.append((c, res.reason))
                continue
            mu = e_value(c).e
            blocker = c
            break
        if mu is not None and m_max >= mu:
            budget_limited = False
            break
        if m_max >= m_budget_cap:
            budget_limited = True
            cover = Fraction(m_max + 1)
            if mu is None or cover < mu:
                mu = cover
                blocker = None
            break
        grown = max(2 * m_max, 32)
        if mu is not None:
            # grow toward ceil(mu), geometrically to avoid overshooting when a
            # smaller-e candidate is still hiding between m_max and the target
            grown = min(grown, _ceil_fraction(mu))
        m_max = min(m_budget_cap, grown)
    return BoundReport(
        n=n,
        f=n * mu,
        mu=mu,
        blocker=blocker,
        exclusions_used=tuple(excluded),
        coverage=Coverage(m_checked_k0=m_max, m_checked_knz=m_max),
        cfg=cfg,
        budget_limited=budget_limited,
        m_budget_cap=m_budget_cap,
    )


def _ceil_fraction(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _bound_worker(args: tuple) -> tuple[int, BoundReport]:
    n, db, cap = args
    return n, compute_bound(n, db=db, m_budget_cap=cap)


def bounds_for_ns(
    ns: Iterable[int],
    db: Optional[ExclusionDb] = None,
    m_budget_cap: int = DEFAULT_M_BUDGET_CAP,
    jobs: int = 1,
) -> dict[int, BoundReport]:
    """Deterministic map n -> report over a set of n, optionally in parallel.

    Every n uses its own default specialization; inputs are immutable, so
    workers share nothing.
    """
    if db is None:
        db = default_db()
    ns = sorted(set(ns))
    if jobs <= 1 or len(ns) <= 1:
        return {n: compute_bound(n, db=db, m_budget_cap=m_budget_cap) for n in ns}
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = dict(pool.map(_bound_worker, [(n, db, m_budget_cap) for n in ns]))
    return {n: results[n] for n in ns}


@dataclass(frozen=True)
class FormulaBound:
    """One evaluable closed-form bound: its f(n) value when applicable."""

    name: str
    applicable: bool
    value: Optional[BoundValue]
    source: str


def formula_theoremone(n: int) -> list[FormulaBound]:
    """The six-case Delta = n - d^2 analysis; several cases may apply at once.

    Values: (a) (2n-1)^2, (b) n(n-1), (c) n(d(d-3)+1), (d) n(d(d-3)+2)/2,
    (e) n^2 gated by Delta odd with 2d-1 > Delta >= 4*n^(1/4)+1 (decided
    exactly as (Delta-1)^4 >= 256n), (f) n(n*sqrt(n) - 5n + 5*sqrt(n) - 1)/2.
    Square n admits no abnormal curve, so the list is empty.
    """
    if n < 10:
        raise DomainError(f"formulas require n >= 10, got {n}")
    if is_square(n):
        return []
    d = isqrt(n)
    delta = n - d * d
    out = []
    out.append(
        FormulaBound("theoremone-a", delta == 1, Q((2 * n - 1) ** 2) if delta == 1 else None,
                     "Delta=1 case (Biran)")
    )
    out.append(
        FormulaBound("theoremone-b", delta == 2, Q(n * (n - 1)) if delta == 2 else None,
                     "Delta=2 case")
    )
    c_ok = delta > 2 and delta % 2 == 1
    out.append(
        FormulaBound("theoremone-c", c_ok, Q(n * (d * (d - 3) + 1)) if c_ok else None,
                     "odd Delta > 2 case")
    )
    d_ok = delta > 3 and delta % 2 == 0
    out.append(
        FormulaBound("theoremone-d", d_ok, Q(n * (d * (d - 3) + 2), 2) if d_ok else None,
                     "even Delta > 3 case")
    )
    e_ok = delta % 2 == 1 and 2 * d - 1 > delta and (delta - 1) ** 4 >= 256 * n
    out.append(
        FormulaBound("theoremone-e", e_ok, Q(n * n) if e_ok else None,
                     "large odd Delta case")
    )
    f_ok = delta == 2 * d - 1
    # n*(n*sqrt(n) - 5n + 5*sqrt(n) - 1)/2 = -n(5n+1)/2 + (n(n+5)/2) * sqrt(n)
    f_val = QuadraticExpr(Q(-n * (5 * n + 1), 2), Q(n * (n + 5), 2), Q(n)) if f_ok else None
    out.append(FormulaBound("theoremone-f", f_ok, f_val, "Delta=2d-1 case"))
    return out


def theoremone_weak_c(n: int) -> QuadraticExpr:
    """Weaker companion of the odd-Delta case: n(n - 5*sqrt(n) + 1)."""
    return QuadraticExpr(Q(n * (n + 1)), Q(-5 * n), Q(n))


def theoremone_weak_d(n: int) -> QuadraticExpr:
    """Weaker companion of the even-Delta case: n(n - 5*sqrt(n) + 2)/2."""
    return QuadraticExpr(Q(n * (n + 2), 2), Q(-5 * n, 2), Q(n))


def formula_correm_and_circ(n: int) -> list[FormulaBound]:
    """Uniform-multiplicity consequences: f = 21(n-2), 42(n-2),
    (n^2 - 5n*sqrt(n))/2, and f = 21n (the almost-uniform refinement)."""
    if n < 10:
        raise DomainError(f"formulas require n >= 10, got {n}")
    quad = QuadraticExpr(Q(n * n, 2), Q(-5 * n, 2), Q(n))
    return [
        FormulaBound("correm-21", True, Q(21 * (n - 2)), "uniform m < 21 (CCMO)"),
        FormulaBound("correm-42", True, Q(42 * (n - 2)), "uniform m <= 42 (Dumnicki)"),
        FormulaBound("correm-quad", True, quad, "uniform quadratic case"),
        FormulaBound("circ", True, Q(21 * n), "almost-uniform refinement of CCMO"),
    ]


# Formulas whose premise is an imported uniform bound follow that source's
# on/off switch in the database; everything else is unconditional.
FORMULA_SOURCE_DEPS: dict[str, str] = {
    "correm-21": "CCMO",
    "correm-42": "Dumnicki",
    "circ": "CCMO",
}


def mu_n(n: int) -> int:
    """The explicit mu certified by the uniform-degree hypothesis, n >= 17.

    With d = floor(sqrt(n)), Delta = n - d^2 and delta = floor(Delta/2):

      odd Delta:  floor(d*(d-3 + (d(d-3)-1)/((d-3)(d^2+delta+1)))
                        * (d^2+delta)/(d^2-delta^2)) + 1
      even Delta: floor(d*(d-3 + (d(d-3)-1)/((d-3)(d^2+delta)))
                        * (d^2+delta-1)/(2d^2-(delta-1)^2)) + 1

    evaluated in exact rational arithmetic.
    """
    if n < 17:
        raise DomainError(f"mu_n requires n >= 17, got {n}")
    if is_square(n):
        raise DomainError(f"mu_n requires nonsquare n, got {n}")
    d = isqrt(n)
    big_delta = n - d * d
    delta = big_delta // 2
    if big_delta % 2 == 1:
        inner = d - 3 + Q(d * (d - 3) - 1, (d - 3) * (d * d + delta + 1))
        val = d * inner * Q(d * d + delta, d * d - delta * delta)
    else:
        inner = d - 3 + Q(d * (d - 3) - 1, (d - 3) * (d * d + delta))
        val = d * inner * Q(d * d + delta - 1, 2 * d * d - (delta - 1) ** 2)
    return val.numerator // val.denominator + 1


def _check_mu_range(n: int, mu: Rational) -> Fraction:
    if n < 10:
        raise DomainError(f"requires n >= 10, got {n}")
    if is_square(n):
        raise DomainError(f"requires nonsquare n, got {n}")
    mu = Fraction(mu)
    if not 1 <= mu <= n * (n - 1):
        raise DomainError(f"mu out of range [1, n(n-1)]: {mu}")
    return mu


def lemcc_hypothesis(n: int, mu: Rational) -> bool:
    """Exact check of ((mu-1)*r + g - 1)/d >= (mu-1) * sqrt(n - 1/mu)."""
    mu = _check_mu_range(n, mu)
    cfg = SpecializationConfig.default(n)
    lhs = Q((mu - 1) * cfg.r + cfg.g - 1, cfg.d)
    diff = QuadraticExpr(lhs, -(mu - 1), n - 1 / mu)
    return sign_of(diff) >= 0


def theoremunif_hypothesis(n: int, mu: Rational) -> bool:
    """Either mu <= 6(n-1), or (nu*r+g-1)/d - 1 >= (nu - d/n)*sqrt(n - 1/mu)
    with nu = (mu-1)/(n-1); exact."""
    mu = _check_mu_range(n, mu)
    if mu <= 6 * (n - 1):
        return True
    cfg = SpecializationConfig.default(n)
    nu = Q(mu - 1, 1) / (n - 1)
    lhs = (nu * cfg.r + cfg.g - 1) / cfg.d - 1
    diff = QuadraticExpr(lhs, -(nu - Q(cfg.d, n)), n - 1 / mu)
    return sign_of(diff) >= 0


@dataclass(frozen=True)
class BestKnown:
    f_best: BoundValue
    source: str


def reference_entries(n: int) -> list[FormulaBound]:
    """Embedded best-known f(n) values imported from the literature."""
    from .tables import REFERENCE_F

    if n in REFERENCE_F:
        value, source = REFERENCE_F[n]
        return [FormulaBound("reference-table", True, Q(value), source)]
    return []


def all_formula_bounds(n: int, db: Optional[ExclusionDb] = None) -> list[FormulaBound]:
    """Every evaluable closed-form bound for n, applicable or not.

    A formula that rests on an imported uniform bound is marked inapplicable
    when its source is disabled in the database in force.
    """
    if db is None:
        db = default_db()
    out = []
    for fb in formula_theoremone(n) + formula_correm_and_circ(n):
        dep = FORMULA_SOURCE_DEPS.get(fb.name)
        if dep is not None and dep not in db.enabled_sources:
            fb = FormulaBound(fb.name, False, None, fb.source)
        out.append(fb)
    lemcc_ok = n >= 17 and not is_square(n)
    if lemcc_ok:
        m = mu_n(n)
        applicable = lemcc_hypothesis(n, m)
        out.append(FormulaBound("lemcc", applicable, Q(n * m) if applicable else None,
                                "explicit uniform-degree certificate"))
    else:
        out.append(FormulaBound("lemcc", False, None, "explicit uniform-degree certificate"))
    out.extend(reference_entries(n))
    return out


def best_known(n: int, report: BoundReport, db: Optional[ExclusionDb] = None) -> BestKnown:
    """Maximum of the algorithmic f, the applicable formulas, and the
    embedded reference values; ties resolve toward the algorithmic result."""
    if n < 10:
        raise DomainError(f"requires n >= 10, got {n}")
    best: BoundValue = report.f
    source = "algorithm"
    for fb in all_formula_bounds(n, db=db):
        if not fb.applicable or fb.value is None:
            continue
        if compare_values(fb.value, best) > 0:
            best = fb.value
            source = fb.name if fb.name != "reference-table" else f"reference ({fb.source})"
    return BestKnown(f_best=best, source=source)
