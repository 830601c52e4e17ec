"""Enumeration of prospective abnormal classes C(t, m, k) and their e-values.

For n >= 10 general points, every class of an abnormal curve is almost
uniform: C(t, m, k) = t*L - m*(E_1 + ... + E_n) - k*E_1 (the exceptional
index is fixed to 1, all permutations being equivalent for general points).
The admissible (t, m, k) satisfy a short list of exact integer and rational
constraints:

  (b)  -m < k  and  k^2 * (n-1) < n * min(m, m+k)
  (c)  m^2*n - m <= t^2 < m^2*n                      when k = 0,
       m^2*n + 2mk + max(k^2-m, k^2-(m+k), 0) <= t^2
                        and  n*t^2 < n*(m^2*n + 2mk) + k^2   when k != 0
  (d)  t^2 - (m+k)^2 - (n-1)*m^2 - 3t + m*n + k >= -2

and, when 0 < m < n and k != 0, the sharper almost-uniform constraints

       m + k > 0,  k^2 <= m,  2mk = t^2 - m^2*n,  m*sqrt(n)-1 < t < m*sqrt(n)+1.

Each candidate carries the exact rational e = e(t, m, k) at which the nef
test class sqrt(n + delta)*L - sum(E_i) meets it with value zero; the minimum
e over the candidates that survive exclusion fixes the certified bound.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .lattice import (
    DivisorClass,
    DomainError,
    InvalidInput,
    Rational,
    ceil_sqrt,
    floor_sqrt,
)


@dataclass(frozen=True)
class CandidateTriple:
    """A prospective abnormal class C(t, m, k) for n general points."""

    n: int
    t: int
    m: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 10:
            raise DomainError(f"candidate analysis requires n >= 10, got {self.n}")
        if self.t < 1 or self.m < 1:
            raise InvalidInput(f"t and m must be positive, got t={self.t}, m={self.m}")

    @property
    def mult_sum(self) -> int:
        return self.m * self.n + self.k

    def divisor_class(self) -> DivisorClass:
        return DivisorClass.almost_uniform(self.n, self.t, self.m, self.k)

    def mults(self) -> tuple[int, ...]:
        """Multiplicity vector sorted nonincreasingly."""
        if self.k >= 0:
            return (self.m + self.k,) + (self.m,) * (self.n - 1)
        return (self.m,) * (self.n - 1) + (self.m + self.k,)

    def sort_key(self) -> tuple[int, int, int, int]:
        return (self.m, 0 if self.k == 0 else 1, self.k, self.t)

    def label(self) -> str:
        return f"C({self.t},{self.m},{self.k})"


@dataclass(frozen=True)
class EValue:
    """Exact e(t, m, k) and f = n*e of a candidate."""

    e: Fraction
    f: Fraction


def is_abnormal(n: int, t: int, m: int, k: int) -> bool:
    """t * sqrt(n) < m*n + k, decided on squares."""
    s = m * n + k
    return s > 0 and t * t * n < s * s


def szcor_b(n: int, m: int, k: int) -> bool:
    return -m < k and k * k * (n - 1) < n * min(m, m + k)


def szcor_c(n: int, t: int, m: int, k: int) -> bool:
    t2 = t * t
    base = m * m * n
    if k == 0:
        return base - m <= t2 < base
    lo = base + 2 * m * k + max(k * k - m, k * k - (m + k), 0)
    # upper bound t^2 < base + 2mk + k^2/n, cleared of the denominator
    return lo <= t2 and n * t2 < n * (base + 2 * m * k) + k * k


def szcor_d(n: int, t: int, m: int, k: int) -> bool:
    return t * t - (m + k) ** 2 - (n - 1) * m * m - 3 * t + m * n + k >= -2


def szcor_conditions(n: int, t: int, m: int, k: int) -> bool:
    """Conditions (a)-(d) for C(t, m, k); (a) is t > 0, m > 0."""
    return t > 0 and m > 0 and szcor_b(n, m, k) and szcor_c(n, t, m, k) and szcor_d(n, t, m, k)


def lemaaa_conditions(n: int, t: int, m: int, k: int) -> bool:
    """Almost-uniform tightenings, valid for 0 < m < n and k != 0."""
    if not (0 < m < n and k != 0):
        raise DomainError("tightenings apply only for 0 < m < n and k != 0")
    if m + k <= 0 or k * k > m:
        return False
    if t * t - m * m * n != 2 * m * k:
        return False
    # m*sqrt(n) - 1 < t < m*sqrt(n) + 1
    return (t + 1) ** 2 > m * m * n and (t - 1) ** 2 < m * m * n


def passes_testlem(h: Sequence[int], t: int, delta: Rational) -> bool:
    """Finiteness test for a prospective class t*L - h_1*E_1 - ... - h_n*E_n.

    With gamma the number of nonzero h_i and a the least positive h_i, checks

      (a)  h_1^2 + ... + h_n^2 < (1 + n/delta)^2 / gamma
      (b)  h_1^2 + ... + h_n^2 - a <= t^2 < (h_1 + ... + h_n)^2 / (n + delta)

    exactly, over the rationals.
    """
    delta = Fraction(delta)
    if delta <= 0:
        raise DomainError(f"delta must be positive, got {delta}")
    h = [int(x) for x in h]
    if any(x < 0 for x in h):
        raise InvalidInput("multiplicities must be non-negative")
    n = len(h)
    gamma = sum(1 for x in h if x != 0)
    if gamma == 0:
        raise InvalidInput("all-zero multiplicity vector")
    a = min(x for x in h if x > 0)
    sq = sum(x * x for x in h)
    s = sum(h)
    t2 = Fraction(t * t)
    cond_a = Fraction(sq) < (1 + Fraction(n) / delta) ** 2 / gamma
    cond_b = sq - a <= t2 and t2 < Fraction(s * s) / (n + delta)
    return cond_a and cond_b


def enumerate_szcor(n: int, m_max: int) -> list[CandidateTriple]:
    """All candidates with 1 <= m <= m_max, sorted by (m, k=0 first, k, t).

    For k = 0 the degree window is m^2*n - m <= t^2 < m^2*n.  For k != 0 and
    m < n the almost-uniform constraints pin t to one of the at most two
    integers adjacent to m*sqrt(n) and force k = (t^2 - m^2*n) / (2m); for
    m >= n the raw window of condition (c) is scanned over the k admitted by
    condition (b).  Deterministic.
    """
    if n < 10:
        raise DomainError(f"enumeration requires n >= 10, got {n}")
    if m_max < 1:
        raise DomainError(f"m_max must be >= 1, got {m_max}")
    out: list[CandidateTriple] = []
    for m in range(1, m_max + 1):
        base = m * m * n
        # k = 0: t^2 in [base - m, base)
        for t in range(max(1, ceil_sqrt(base - m)), floor_sqrt(base - 1) + 1):
            if szcor_d(n, t, m, 0):
                out.append(CandidateTriple(n, t, m, 0))
        if m < n:
            # k != 0 pinned by the almost-uniform constraints
            tm = floor_sqrt(base)
            for t in (tm, tm + 1):
                if t < 1:
                    continue
                num = t * t - base
                if num == 0 or num % (2 * m) != 0:
                    continue
                k = num // (2 * m)
                if k == 0:
                    continue
                if not lemaaa_conditions(n, t, m, k):
                    continue
                if szcor_conditions(n, t, m, k):
                    out.append(CandidateTriple(n, t, m, k))
        else:
            for k in _k_range(n, m):
                lo = base + 2 * m * k + max(k * k - m, k * k - (m + k), 0)
                # n*t^2 <= n*(base + 2mk) + k^2 - 1
                hi2 = (n * (base + 2 * m * k) + k * k - 1) // n
                if hi2 < 0:
                    continue
                for t in range(max(1, ceil_sqrt(lo)), floor_sqrt(hi2) + 1):
                    if szcor_conditions(n, t, m, k):
                        out.append(CandidateTriple(n, t, m, k))
    out.sort(key=CandidateTriple.sort_key)
    return out


def _k_range(n: int, m: int) -> Iterable[int]:
    """Nonzero k admitted by condition (b), for a fixed m."""
    k = 1
    while k * k * (n - 1) < n * m:
        yield k
        k += 1
    k = -1
    while m + k > 0 and k * k * (n - 1) < n * (m + k):
        yield k
        k -= 1


def e_value(c: CandidateTriple) -> EValue:
    """Exact e and f = n*e of an abnormal candidate.

    e is defined by (1/sqrt(n)) * sqrt(1 - 1/(e*n)) = t/(m*n + k), which
    rearranges to e = (mn+k)^2 / (n*((mn+k)^2 - n*t^2)).
    """
    s = c.mult_sum
    gap = s * s - c.n * c.t * c.t
    if gap <= 0:
        raise DomainError(f"{c.label()} is not abnormal for n={c.n}")
    f = Fraction(s * s, gap)
    return EValue(e=f / c.n, f=f)


def almunif_filter(cands: Iterable[CandidateTriple], mu: Rational) -> list[CandidateTriple]:
    """Candidates that could be abnormal for the nef test class at level mu.

    Keeps (t, m, k) with 0 < m < mu and (k = 0 or m*(n-1) < mu); preserves
    input order.
    """
    mu = Fraction(mu)
    if mu < 1:
        raise DomainError(f"mu must be >= 1, got {mu}")
    kept = []
    for c in cands:
        if not 0 < c.m < mu:
            continue
        if c.k != 0 and not c.m * (c.n - 1) < mu:
            continue
        kept.append(c)
    return kept
