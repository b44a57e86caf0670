"""Fibonacci convergents of the golden ratio and nearest-convergent search.

Indexing starts at F(1) = F(2) = 1, so the n-th convergent is
``F(n)/F(n-1)`` for n >= 2.  The variance of a convergent is its exact
absolute distance to the golden ratio, an element of the field; rendering to
a decimal is the only approximate-looking step and even that is correctly
rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import HALF_EVEN, PHI, QuadExt, parse_rational, sign, to_decimal


def fib(n: int) -> int:
    """F(n) with F(1) = F(2) = 1."""
    if n < 1:
        raise ValueError("Fibonacci index starts at 1")
    prev, cur = 1, 1
    for _ in range(n - 2):
        prev, cur = cur, prev + cur
    return cur if n > 1 else 1


@dataclass(frozen=True)
class Convergent:
    n: int
    fn: int
    fn_1: int

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.fn, self.fn_1)

    def ratio_decimal(self, frac_digits: int, rounding: str = HALF_EVEN) -> str:
        return to_decimal(self.ratio, frac_digits, rounding)

    def variance_exact(self) -> QuadExt:
        """|F(n)/F(n-1) - phi| as an exact field element."""
        return abs(QuadExt(self.ratio) - PHI)

    def variance_decimal(self, frac_digits: int, rounding: str = HALF_EVEN) -> str:
        return to_decimal(self.variance_exact(), frac_digits, rounding)


def convergent(n: int) -> Convergent:
    if n < 2:
        raise ValueError("convergents start at n = 2")
    return Convergent(n, fib(n), fib(n - 1))


def variance(n: int, frac_digits: int = 10, rounding: str = HALF_EVEN) -> str:
    """Decimal rendering of the n-th convergent's distance to the golden ratio."""
    return convergent(n).variance_decimal(frac_digits, rounding)


def assess_nearest(value: str | Fraction | int) -> Convergent:
    """The convergent whose ratio is closest to `value`; ties pick smaller n.

    `value` may be a rational string ("p/q" or a decimal with either
    separator) or an exact rational.  The search stops once every later
    convergent provably loses: convergent distances to phi shrink toward
    zero, so later candidates sit at least |value - phi| - variance(n) away,
    and that bound eventually exceeds the best distance found.
    """
    target = parse_rational(value) if isinstance(value, str) else Fraction(value)
    if target <= 0:
        raise ValueError("ratio must be positive")
    phi_gap = abs(QuadExt(target) - PHI)
    best: Convergent | None = None
    best_distance: Fraction | None = None
    n = 2
    prev, cur = 1, 1
    while True:
        candidate = Convergent(n, cur, prev)
        distance = abs(candidate.ratio - target)
        if best_distance is None or distance < best_distance:
            best, best_distance = candidate, distance
        if sign(phi_gap - candidate.variance_exact() - best_distance) > 0:
            return best
        n += 1
        prev, cur = cur, prev + cur
