"""Exact and floating-point harmonic numbers.

The exact routines return :class:`fractions.Fraction`, which is always kept
in lowest terms with a positive denominator; everything numerical in the
package is checked against these values.
"""

from __future__ import annotations

import math
from fractions import Fraction

ExactRational = Fraction

# Euler-Mascheroni constant, 50 significant digits.
EULER_GAMMA_DIGITS = "0.57721566490153286060651209008240243104215933593992"
EULER_GAMMA = float(EULER_GAMMA_DIGITS)


def _check_index(n, minimum=1):
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"n must be an integer, got {type(n).__name__}")
    if n < minimum:
        raise ValueError(f"n must be >= {minimum}, got {n}")


def _reciprocal_sum(lo: int, hi: int) -> tuple[int, int]:
    # sum of 1/k for lo <= k < hi as an unreduced p/q, by binary splitting
    if hi - lo == 1:
        return 1, lo
    mid = (lo + hi) // 2
    p1, q1 = _reciprocal_sum(lo, mid)
    p2, q2 = _reciprocal_sum(mid, hi)
    return p1 * q2 + p2 * q1, q1 * q2


def harmonic_exact(n: int) -> Fraction:
    """Return H_n = 1 + 1/2 + ... + 1/n as a reduced fraction.

    >>> harmonic_exact(5)
    Fraction(137, 60)
    """
    _check_index(n)
    p, q = _reciprocal_sum(1, n + 1)
    return Fraction(p, q)


def harmonic_next(h_n: Fraction, n: int) -> Fraction:
    """Advance H_n to H_{n+1}.

    ``h_n`` is trusted to equal ``harmonic_exact(n)``; that cannot be checked
    without recomputing it.
    """
    _check_index(n)
    return h_n + Fraction(1, n + 1)


def harmonic_float(n: int) -> float:
    """H_n in double precision.

    Terms are added smallest first and the sum is accumulated with
    :func:`math.fsum`, so the only error left is the rounding of each 1/k
    plus one final rounding.
    """
    _check_index(n)
    return math.fsum(1.0 / k for k in range(n, 0, -1))


def harmonic_asymptotic(n: int) -> float:
    """Truncated expansion gamma + ln n + 1/(2n)."""
    _check_index(n)
    return EULER_GAMMA + math.log(n) + 0.5 / n


def estimate_gamma(n: int) -> float:
    """Estimate gamma as H_n - ln n - 1/(2n); the error behaves like -1/(12 n^2)."""
    _check_index(n, minimum=2)
    return harmonic_float(n) - math.log(n) - 0.5 / n
