"""One-sided non-effectivity certificates via specialization and unloading.

The engine specializes the n points onto an irreducible plane curve of
degree d through the first r of them (genus g = (d-1)(d-2)/2) and walks the
sequence D_0, D_1, ... where each step subtracts the class
[C] = d*L - E_1 - ... - E_r and renormalizes by *unloading*: repeatedly
subtracting N_j = E_j - E_{j+1} (and N_n = E_n) whenever the class meets N_j
negatively, until the multiplicities are nonincreasing with last entry >= 0.

Writing t_i = D_i . L and stopping at the first index j with t_j < d, the
criterion

    D_i . C <= g - 1  for 0 <= i < j   and   (t_j+1)(t_j+2) <= 2(d*t_j - D_j . C)

certifies that t_0*L - m_1*E_1 - ... - m_n*E_n is not the class of an
effective divisor, hence alpha(m) > t_0; the largest t_0 satisfying it gives
a certified lower bound 1 + t_0 for alpha(m).  Everything is integer
arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Optional, Sequence

from .lattice import (
    DivisorClass,
    DomainError,
    InvalidInput,
    ceil_sqrt,
    floor_sqrt,
)


class UnloadingDiverged(RuntimeError):
    """Internal diagnostic: the unloading rewriting exceeded its step cap."""


@dataclass(frozen=True)
class SpecializationConfig:
    """Parameters (n, d, r, g) of the specialization curve.

    Defaults are d = floor(sqrt(n)), r = floor(d*sqrt(n)), g = (d-1)(d-2)/2;
    r = ceil(d*sqrt(n)) is a supported override.
    """

    n: int
    d: int
    r: int
    g: int

    def __post_init__(self) -> None:
        if self.n < 10:
            raise DomainError(f"specialization requires n >= 10, got {self.n}")
        if self.d < 1 or self.r < 1 or self.g < 0:
            raise InvalidInput(f"bad specialization parameters {self}")
        if self.r > self.n:
            raise InvalidInput(f"r = {self.r} exceeds n = {self.n}")

    @classmethod
    def default(cls, n: int) -> "SpecializationConfig":
        d = isqrt(n)
        r = floor_sqrt(d * d * n)
        g = (d - 1) * (d - 2) // 2
        return cls(n=n, d=d, r=r, g=g)

    @classmethod
    def with_ceil_r(cls, n: int) -> "SpecializationConfig":
        d = isqrt(n)
        r = ceil_sqrt(d * d * n)
        g = (d - 1) * (d - 2) // 2
        return cls(n=n, d=d, r=r, g=g)

    def is_default(self) -> bool:
        return self == SpecializationConfig.default(self.n)

    def curve_class(self) -> DivisorClass:
        return DivisorClass(self.d, (1,) * self.r + (0,) * (self.n - self.r))


def unload(f: DivisorClass) -> DivisorClass:
    """Unique unloading fixpoint of f: multiplicities nonincreasing, last >= 0.

    The rewriting (fix the smallest violating j, repeat) is confluent, so the
    fixpoint may be computed with batched moves; the result is identical.
    Degree is unchanged.
    """
    b = list(f.mults)
    n = len(b)
    sites = [j for j in range(1, n) if b[j - 1] < b[j]]
    if b[-1] < 0:
        sites.append(n)
    cap = (n * (1 + sum(abs(m) for m in b))) ** 2 + n
    _relax(b, sites, cap)
    return DivisorClass(f.degree, tuple(b))


def _relax(b: list[int], sites: list[int], cap: int) -> None:
    """Drive b to the unloading fixpoint from a worklist of suspect sites.

    Site j in 1..n-1 is the adjacent pair (b[j-1], b[j]); site n is the
    non-negativity rule for the last entry.  Each interior batch performs
    ceil((b[j] - b[j-1]) / 2) elementary moves at once, which repeated
    single moves at the same site would also reach.
    """
    n = len(b)
    work = list(sites)
    moves = 0
    while work:
        j = work.pop()
        if j == n:
            if b[n - 1] < 0:
                moves += -b[n - 1]
                b[n - 1] = 0
                if n > 1:
                    work.append(n - 1)
        else:
            lo, hi = b[j - 1], b[j]
            if lo < hi:
                c = (hi - lo + 1) // 2
                b[j - 1] = lo + c
                b[j] = hi - c
                moves += c
                if j > 1:
                    work.append(j - 1)
                work.append(j + 1)
        if moves > cap:
            raise UnloadingDiverged(f"exceeded {cap} elementary moves")


def _step_normal_form(b: list[int], r: int) -> None:
    """Subtract 1 from the first r entries of a normal-form vector and unload.

    For such inputs the fixpoint has a closed description: the only possible
    interior violation sits at the junction r and differs by exactly one, so
    unloading just re-sorts the entries; entries driven to -1 (from zeros in
    the prefix) are raised back to 0 by the tail rule.
    """
    for i in range(r):
        b[i] -= 1
    b.sort(reverse=True)
    i = len(b) - 1
    while i >= 0 and b[i] < 0:
        b[i] = 0
        i -= 1


@dataclass(frozen=True)
class TraceStep:
    index: int
    cls: DivisorClass
    t: int
    dot_c: int


@dataclass(frozen=True)
class UnloadingTrace:
    """Recorded walk D_0, D_1, ... with t_i = D_i . L and D_i . C.

    j is the first index with t_j < d.  omega_prime, when computed, is the
    least index at which every multiplicity has unloaded to zero.
    """

    steps: tuple[TraceStep, ...]
    j: int
    omega_prime: Optional[int] = None


def _require_normal_form(mults: Sequence[int], n: int) -> tuple[int, ...]:
    ms = tuple(int(m) for m in mults)
    if len(ms) != n:
        raise InvalidInput(f"expected {n} multiplicities, got {len(ms)}")
    if any(a < b for a, b in zip(ms, ms[1:])):
        raise InvalidInput("multiplicities must be nonincreasing")
    if ms[-1] < 0:
        raise InvalidInput("multiplicities must be non-negative")
    return ms


def d_sequence(
    d0: DivisorClass,
    cfg: SpecializationConfig,
    extend_to_omega: bool = False,
) -> UnloadingTrace:
    """Trace of the specialization walk starting at d0.

    Records (i, D_i, t_i, D_i . C) for i = 0..j where j is the first index
    with t_i < d; D_i . C = d*t_i - (sum of the first r multiplicities).
    With extend_to_omega the walk continues past j until the multiplicities
    are all zero and records omega_prime (steps are recorded up to
    max(j, omega_prime)).
    """
    if d0.n != cfg.n:
        raise InvalidInput(f"class has n={d0.n}, config has n={cfg.n}")
    _require_normal_form(d0.mults, cfg.n)
    d, r = cfg.d, cfg.r
    b = list(d0.mults)
    t = d0.degree
    steps: list[TraceStep] = []
    j: Optional[int] = None
    omega: Optional[int] = None
    cap = sum(b) + d0.n + 12 + max(0, t) // d
    i = 0
    while True:
        dot = d * t - sum(b[:r])
        record = j is None or (extend_to_omega and (omega is None))
        if record:
            steps.append(TraceStep(i, DivisorClass(t, tuple(b)), t, dot))
        if omega is None and all(x == 0 for x in b):
            omega = i
        if j is None and t < d:
            j = i
        if j is not None and (not extend_to_omega or omega is not None):
            break
        if i > cap:
            raise UnloadingDiverged(f"trace exceeded {cap} steps")
        t -= d
        _step_normal_form(b, r)
        i += 1
    return UnloadingTrace(steps=tuple(steps), j=j, omega_prime=omega if extend_to_omega else None)


def criterion_holds(d0: DivisorClass, cfg: SpecializationConfig) -> bool:
    """Non-effectivity criterion on the trace of d0 (see module docstring)."""
    if d0.n != cfg.n:
        raise InvalidInput(f"class has n={d0.n}, config has n={cfg.n}")
    _require_normal_form(d0.mults, cfg.n)
    return _criterion(d0.degree, d0.mults, cfg)


def _criterion(t0: int, mults: Sequence[int], cfg: SpecializationConfig) -> bool:
    """Hot path: no validation, early abort on the first interior failure."""
    d, r, g = cfg.d, cfg.r, cfg.g
    t = t0
    b = list(mults)
    while t >= d:
        if d * t - sum(b[:r]) > g - 1:
            return False
        t -= d
        _step_normal_form(b, r)
    # at j: d*t_j - D_j.C equals the sum of the first r multiplicities
    return (t + 1) * (t + 2) <= 2 * sum(b[:r])


def alpha_lower_bound(mults: Sequence[int], cfg: SpecializationConfig) -> int:
    """Certified lower bound for alpha(mults): 1 + max{t : criterion holds}.

    The window [0, ceil(sum(m)/sqrt(n)) + d] is scanned from the top (the
    criterion is not assumed monotone in t, and the first satisfying t from
    above is the maximum); if no t satisfies the criterion the bound is 1.
    """
    ms = _require_normal_form(mults, cfg.n)
    total = sum(ms)
    if total == 0:
        raise InvalidInput("all-zero multiplicity vector")
    hi = _ceil_div_sqrt(total, cfg.n) + cfg.d
    for t in range(hi, -1, -1):
        if _criterion(t, ms, cfg):
            return t + 1
    return 1


def _ceil_div_sqrt(s: int, n: int) -> int:
    """Smallest integer c with c >= s / sqrt(n)."""
    c = isqrt(s * s // n)
    while c * c * n < s * s:
        c += 1
    return c


def semiuniformize(n: int, m: int, k: int) -> tuple[int, ...]:
    """Nonincreasing multiplicity vector fed to the criterion for C(t, m, k).

    For 0 < k <= n with k^2 <= m the semiuniform vector ((m+1)^[k], m^[n-k])
    is used: under the specialization its alpha is a lower bound for alpha of
    the raw vector, because the raw vector differs from it by adding the
    effective classes E_1 - E_j, 2 <= j <= k.  For k < 0 the raw
    (m^[n-1], m+k); for k = 0 the uniform vector.  If the k > 0 conditions
    fail, falls back to the raw sorted vector (m+k, m^[n-1]).
    """
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    if k == 0:
        return (m,) * n
    if k < 0:
        return (m,) * (n - 1) + (m + k,)
    if k <= n and k * k <= m:
        return (m + 1,) * k + (m,) * (n - k)
    return (m + k,) + (m,) * (n - 1)


def alpha_lb_closed(n: int, m: int, k: int, cfg: Optional[SpecializationConfig] = None) -> int:
    """Closed-form bound 1 + min(floor((mr+k+g-1)/d), s + u*d) for alpha.

    Requires k^2 <= m, m < n when k != 0, and the default specialization
    (the uniform k = 0 case is valid for every m >= 1).  u and rho split the
    total multiplicity as m*n + k = u*r + rho with 0 < rho <= r, and s is
    the largest integer with (s+1)(s+2) <= 2*rho and 0 <= s < d.  When k < 0
    and Delta = n - d^2 is even and positive, mr + g - 1 replaces
    mr + k + g - 1.
    """
    if cfg is None:
        cfg = SpecializationConfig.default(n)
    elif not cfg.is_default() or cfg.n != n:
        raise DomainError("closed form is proved only for the default d, r, g")
    if m < 1 or k * k > m or (k != 0 and m >= n):
        raise DomainError(f"closed form needs k^2 <= m (and m < n unless k = 0), got m={m}, k={k}")
    d, r, g = cfg.d, cfg.r, cfg.g
    total = m * n + k
    u, rho = divmod(total, r)
    if rho == 0:
        u, rho = u - 1, r
    s = 0
    while s + 1 < d and (s + 2) * (s + 3) <= 2 * rho:
        s += 1
    delta = n - d * d
    numer = m * r + g - 1 if (k < 0 and delta > 0 and delta % 2 == 0) else m * r + k + g - 1
    return 1 + min(numer // d, s + u * d)
