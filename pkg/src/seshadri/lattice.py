"""Exact arithmetic substrate: the blow-up lattice of the plane and surd signs.

Everything downstream reduces to two primitives kept here:

* integer intersection numbers of divisor classes on the blow-up of n
  points (basis L, E_1, ..., E_n with L^2 = 1, E_i^2 = -1, mixed products 0),
* exact sign decisions for numbers of the form a + b*sqrt(q) with a, b, q
  rational and q >= 0.

No floating point is used anywhere; decisions that look like "t < m*sqrt(n)"
are settled by comparing squares of integers or rationals.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Union

Q = Fraction
Rational = Union[int, Fraction]

NEGATIVE = -1
ZERO = 0
POSITIVE = 1

LESS = -1
EQUAL = 0
GREATER = 1


class DimensionMismatch(ValueError):
    """Two divisor classes live on blow-ups of different numbers of points."""


class DomainError(ValueError):
    """An operation was called outside its mathematical domain."""


class InvalidInput(ValueError):
    """Structurally bad input (wrong length, degenerate vector, ...)."""


def floor_sqrt(x: int) -> int:
    """Largest integer s with s*s <= x (x >= 0)."""
    if x < 0:
        raise DomainError(f"floor_sqrt of negative {x}")
    return isqrt(x)


def ceil_sqrt(x: int) -> int:
    """Smallest integer s >= 0 with s*s >= x."""
    if x <= 0:
        return 0
    return isqrt(x - 1) + 1


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def _sign(x: Rational) -> int:
    if x > 0:
        return POSITIVE
    if x < 0:
        return NEGATIVE
    return ZERO


@dataclass(frozen=True)
class DivisorClass:
    """Class t*L - m_1*E_1 - ... - m_n*E_n on the blow-up of n points.

    `mults` holds the m_i; entries may be negative while an unloading pass is
    in flight.  All coordinates are arbitrary-precision integers.
    """

    degree: int
    mults: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "mults", tuple(int(m) for m in self.mults))
        object.__setattr__(self, "degree", int(self.degree))
        if len(self.mults) < 1:
            raise InvalidInput("divisor class needs at least one point")

    @property
    def n(self) -> int:
        return len(self.mults)

    @classmethod
    def uniform(cls, n: int, degree: int, m: int) -> "DivisorClass":
        return cls(degree, (m,) * n)

    @classmethod
    def almost_uniform(cls, n: int, t: int, m: int, k: int) -> "DivisorClass":
        """t*L - m*(E_1 + ... + E_n) - k*E_1."""
        return cls(t, (m + k,) + (m,) * (n - 1))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        self._check_same_n(other)
        return DivisorClass(
            self.degree + other.degree,
            tuple(a + b for a, b in zip(self.mults, other.mults)),
        )

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        self._check_same_n(other)
        return DivisorClass(
            self.degree - other.degree,
            tuple(a - b for a, b in zip(self.mults, other.mults)),
        )

    def _check_same_n(self, other: "DivisorClass") -> None:
        if self.n != other.n:
            raise DimensionMismatch(f"n mismatch: {self.n} != {other.n}")

    def dot(self, other: "DivisorClass") -> int:
        return intersect(self, other)


def intersect(d1: DivisorClass, d2: DivisorClass) -> int:
    """Intersection pairing t1*t2 - sum(m_i * m'_i); exact, symmetric."""
    if d1.n != d2.n:
        raise DimensionMismatch(f"n mismatch: {d1.n} != {d2.n}")
    return d1.degree * d2.degree - sum(a * b for a, b in zip(d1.mults, d2.mults))


@dataclass(frozen=True)
class QuadraticExpr:
    """The real number a + b*sqrt(q), with a, b, q rational and q >= 0.

    The sign is decidable from (a, b, q) alone by comparing a^2 with b^2*q,
    so no square root is ever extracted.  q is not normalized to squarefree
    form; values like n - 1/mu are used as-is.
    """

    a: Fraction
    b: Fraction
    q: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        object.__setattr__(self, "q", Fraction(self.q))
        if self.q < 0:
            raise DomainError(f"radicand must be >= 0, got {self.q}")

    @classmethod
    def from_rational(cls, x: Rational, q: Rational = 0) -> "QuadraticExpr":
        return cls(Fraction(x), Fraction(0), Fraction(q))

    def sign(self) -> int:
        return sign_of(self)

    def __float__(self) -> float:
        # Display only; never used in a decision.
        return float(self.a) + float(self.b) * float(self.q) ** 0.5


def sign_of(x: QuadraticExpr) -> int:
    """Exact sign of a + b*sqrt(q).

    When a and b agree in sign the answer is immediate; when they disagree
    the dominant term is found by comparing a^2 against b^2*q.
    """
    if x.q == 0 or x.b == 0:
        return _sign(x.a)
    sa = _sign(x.a)
    sb = _sign(x.b)
    if sa == ZERO:
        return sb
    if sa == sb:
        return sa
    lhs = x.a * x.a
    rhs = x.b * x.b * x.q
    if lhs > rhs:
        return sa
    if lhs < rhs:
        return sb
    return ZERO


def compare_rational_sqrt(p: Rational, a: Rational) -> int:
    """Ordering of the rational p against sqrt(a), for a >= 0.

    Returns LESS / EQUAL / GREATER.  Negative p is always LESS; otherwise the
    comparison of p^2 with a decides.
    """
    p = Fraction(p)
    a = Fraction(a)
    if a < 0:
        raise DomainError(f"sqrt argument must be >= 0, got {a}")
    if p < 0:
        return LESS
    return _sign(p * p - a)


def compare_values(x: Union[Rational, QuadraticExpr], y: Union[Rational, QuadraticExpr]) -> int:
    """Compare two values that are rationals or surds over a common radicand.

    Used when ranking closed-form bounds; raises if the radicands genuinely
    differ (never happens for the bounds handled here, which all live in
    Q(sqrt(n)) for a single n).
    """
    xa, xb, xq = _as_triple(x)
    ya, yb, yq = _as_triple(y)
    if xb != 0 and yb != 0 and xq != yq:
        raise DomainError(f"incomparable radicands {xq} and {yq}")
    q = xq if xb != 0 else yq
    return sign_of(QuadraticExpr(xa - ya, xb - yb, q))


def _as_triple(x: Union[Rational, QuadraticExpr]) -> tuple[Fraction, Fraction, Fraction]:
    if isinstance(x, QuadraticExpr):
        return x.a, x.b, x.q
    return Fraction(x), Fraction(0), Fraction(0)
