"""Integrands of the harmonic-number integral identities.

All powers of sech are formed in log space.  cosh overflows a double near
x = 710, while the transformed half-line quadrature routinely asks for the
integrand far beyond that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

_LN2 = math.log(2.0)
# below this distance from x = 1 the quotient (1 - x^n)/(1 - x) loses
# about half of the significand
EULER_SWITCH = 2.0 ** -26


@dataclass(frozen=True)
class SechExpIntegrand:
    """Parameters of x -> exp(-beta*x) * sech(x)**m on [0, inf).

    ``unproven=True`` relaxes ``beta > 0`` to ``beta > -m``, which keeps the
    integral finite; it exists only for exploratory sweeps.
    """

    beta: float
    m: int
    unproven: bool = False

    def __post_init__(self):
        if isinstance(self.m, bool) or not isinstance(self.m, int) or self.m < 1:
            raise ValueError(f"sech power m must be a positive integer, got {self.m!r}")
        if not math.isfinite(self.beta):
            raise ValueError(f"beta must be finite, got {self.beta!r}")
        if self.unproven:
            if self.beta <= -self.m:
                raise ValueError(f"beta must exceed -m = {-self.m} for integrability, got {self.beta}")
        elif self.beta <= 0:
            raise ValueError(f"beta must be positive, got {self.beta}")

    def __call__(self, x: float) -> float:
        return sech_exp_value(self, x)

    def even(self, x: float) -> float:
        """Full-line extension exp(-beta*|x|) * sech(x)**m."""
        return sech_exp_value(self, abs(x))


@dataclass(frozen=True)
class EulerIntegrand:
    """x -> (1 - x**n) / (1 - x) on [0, 1]."""

    n: int

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n!r}")

    def __call__(self, x: float) -> float:
        return euler_value(self, x)


def log_sech(x: float) -> float:
    """ln(sech x) for x >= 0, as ln 2 - x - ln(1 + exp(-2x))."""
    if x < 0:
        raise ValueError(f"log_sech expects x >= 0, got {x}")
    return _LN2 - x - math.log1p(math.exp(-2.0 * x))


def _sech(x):
    # 2 e^-x / (1 + e^-2x): never overflows for x >= 0
    e = math.exp(-x)
    return 2.0 * e / (1.0 + e * e)


def sech_exp_value(spec: SechExpIntegrand, x: float) -> float:
    """exp(-beta*x) * sech(x)**m for x >= 0.

    Equal to exp(-beta*x + m*log_sech(x)), but for beta >= 0 both factors are
    kept separate and <= 1: a single exp of an argument of size ~700 would
    turn its rounding error into ~1e-13 relative error in the result.
    """
    if spec.beta >= 0.0:
        return math.exp(-spec.beta * x) * _sech(x) ** spec.m
    return math.exp(-spec.beta * x + spec.m * log_sech(x))


def _euler_quotient(n, x):
    return (1.0 - x ** n) / (1.0 - x)


def _euler_geometric(n, x):
    # Horner form of 1 + x + ... + x^(n-1)
    acc = 1.0
    for _ in range(n - 1):
        acc = acc * x + 1.0
    return acc


def euler_value(spec: EulerIntegrand, x: float) -> float:
    """Euler integrand with the removable singularity at x = 1 filled in (value n)."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"euler_value expects 0 <= x <= 1, got {x}")
    if 1.0 - x < EULER_SWITCH:
        return _euler_geometric(spec.n, x)
    return _euler_quotient(spec.n, x)
