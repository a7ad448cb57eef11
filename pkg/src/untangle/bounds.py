"""Exact lower-bound values for the number of fixable vertices.

All bounds are square roots.  A bound is represented by its square, so
"``k`` vertices are guaranteed" becomes an integer/rational comparison
``k**2 <= bound**2`` and no floating point is involved.  The general bound
``sqrt((log2 n - 1) / log2 log2 n)`` has an irrational square; it is decided
by bracketing ``log2 n`` between dyadic rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class SqrtBound:
    """The value ``sqrt(square)``."""

    square: Fraction
    label: str = ""

    def admits(self, k: int) -> bool:
        """True iff ``k <= sqrt(square)``."""
        return k * k <= self.square

    def ceil(self) -> int:
        """Smallest integer ``k`` with ``k >= sqrt(square)``."""
        sq = Fraction(self.square)
        k = math.isqrt(sq.numerator // sq.denominator)
        while k * k < sq:
            k += 1
        while k > 0 and (k - 1) ** 2 >= sq:
            k -= 1
        return k

    def floor(self) -> int:
        k = self.ceil()
        return k if k * k == self.square else k - 1

    @property
    def num(self) -> int:
        return Fraction(self.square).numerator

    @property
    def den(self) -> int:
        return Fraction(self.square).denominator

    def __str__(self) -> str:
        return f"sqrt({self.square})"


def fan_bound(delta: int) -> SqrtBound:
    return SqrtBound(Fraction(delta + 1, 2), "fan")


def diameter_bound(d: int) -> SqrtBound:
    return SqrtBound(Fraction(d), "diameter")


def path_bound(l: int) -> SqrtBound:
    """Guarantee for a path with ``l`` vertices whose chords are one-sided."""
    return SqrtBound(Fraction(l + 1, 2), "path")


def outerplanar_bound(n: int) -> SqrtBound:
    return SqrtBound(Fraction(n, 2), "outerplanar")


def _log2_bracket(n: int, p: int) -> tuple[Fraction, Fraction]:
    """``lo <= log2(n) < hi`` with ``hi - lo = 2**-p``."""
    a = (n ** (1 << p)).bit_length() - 1
    return Fraction(a, 1 << p), Fraction(a + 1, 1 << p)


def _is_pow2(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def _log_power_vs_half(n: int, j: int) -> int:
    """Sign of ``(log2 n)**j - n/2``, decided exactly."""
    half = Fraction(n, 2)
    if _is_pow2(n):
        lg = n.bit_length() - 1
        v = Fraction(lg) ** j - half
        return (v > 0) - (v < 0)
    # log2 n is transcendental here, so equality cannot occur
    p = 4
    while True:
        lo, hi = _log2_bracket(n, p)
        if hi ** j < half:
            return -1
        if lo ** j > half:
            return 1
        p += 2


def general_bound_admits(n: int, k: int) -> bool:
    """True iff ``k <= sqrt((log2 n - 1) / log2 log2 n)`` (``n >= 4``).

    Equivalent to ``(log2 n)**(k*k) <= n / 2``.
    """
    if n < 4:
        raise ValueError("bound defined for n >= 4")
    if k <= 0:
        return True
    return _log_power_vs_half(n, k * k) <= 0


def general_bound_ceil(n: int) -> int:
    """Smallest integer ``k >= sqrt((log2 n - 1) / log2 log2 n)``."""
    if n < 4:
        raise ValueError("bound defined for n >= 4")
    k = 1
    while _log_power_vs_half(n, k * k) < 0:
        k += 1
    return k


def fan_preferred(n: int, delta: int) -> bool:
    """``delta >= log2(n) + 2``, i.e. ``2**(delta - 2) >= n``."""
    return delta >= 2 and (1 << (delta - 2)) >= n


def guarantee_value(n: int, delta: int | None = None, diam: int | None = None, strategy: str = "auto") -> SqrtBound:
    """Bound attached to a strategy: ``sqrt((delta+1)/2)`` for the fan path,
    ``sqrt(d)`` for the diameter path, ``sqrt(n/2)`` for outerplanar graphs.

    For ``auto`` the strategy is picked by the degree rule first.
    """
    if strategy == "auto":
        if delta is None:
            raise ValueError("auto strategy needs the maximum degree")
        strategy = "fan" if fan_preferred(n, delta) else "diameter"
    if strategy == "fan":
        return fan_bound(delta)
    if strategy == "diameter":
        return diameter_bound(diam)
    if strategy == "outerplanar":
        return outerplanar_bound(n)
    raise ValueError(f"unknown strategy {strategy!r}")
