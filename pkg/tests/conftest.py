"""Shared reference implementations and helpers for the test suite."""
from __future__ import annotations

from math import isqrt

import pytest

from seshadri.candidates import lemaaa_conditions, szcor_conditions


def unload_literal(mults):
    """Reference unloading: smallest violating index first, one move at a time.

    Interior move at j: add 1 to entry j-1 and subtract 1 from entry j (the
    class meets E_j - E_{j+1} negatively); tail move: raise a negative last
    entry by 1.  Independent of the production implementation.
    """
    b = list(mults)
    n = len(b)
    cap = (n * (1 + sum(abs(x) for x in b))) ** 2 + n
    steps = 0
    while True:
        j = None
        for i in range(1, n):
            if b[i - 1] < b[i]:
                j = i
                break
        if j is None and b[n - 1] < 0:
            j = n
        if j is None:
            return tuple(b)
        if j == n:
            b[n - 1] += 1
        else:
            b[j - 1] += 1
            b[j] -= 1
        steps += 1
        assert steps <= cap, "literal unloading diverged"


def brute_force_candidates(n, m_max):
    """Naive triple loop over (t, m, k), applying the admissibility
    predicates verbatim; the enumeration oracle."""
    out = []
    root = isqrt(n - 1) + 1
    for m in range(1, m_max + 1):
        for k in range(-m, m + 1):
            for t in range(1, (m + 1) * root + 1):
                if not szcor_conditions(n, t, m, k):
                    continue
                if k != 0 and 0 < m < n and not lemaaa_conditions(n, t, m, k):
                    continue
                out.append((t, m, k))
    return sorted(out)


def ceil_frac(num, den):
    return -((-num) // den)


@pytest.fixture(scope="session")
def rng():
    import random

    return random.Random(0x5E5)
