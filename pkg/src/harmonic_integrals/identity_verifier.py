"""Harmonic numbers from sums of exponential-sech integrals.

For alpha > 0 and k >= 1 define the half-line integrals

    I_{k+1} = int_0^inf exp(-alpha x) sech^(k+1)(x) dx
    J_k     = int_0^inf exp(-(alpha+1) x) sech^k(x) dx

Integration by parts gives I_{k+1} + (alpha - (k-1))/k * J_k = 1/k, so the
sum over k = 1..n of these combinations is H_n whatever alpha is.  The
full-line version integrates exp(-alpha|x|) etc. over R and carries a factor
1/2.

I and J are always integrated separately so that a residual can be traced
back to the integral responsible for it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact_core import harmonic_exact
from .integrands import EulerIntegrand, SechExpIntegrand
from .quadrature import (
    DEFAULT_CONFIG,
    QuadratureConfig,
    QuadratureResult,
    integrate_even_full_line,
    integrate_finite,
    integrate_half_line,
)

DENOMINATORS = ("k", "n")


@dataclass(frozen=True)
class IdentityParams:
    """Term index ``k`` and decay parameter ``alpha``.

    The identity is only established for alpha > 0.  ``unproven=True``
    admits -k < alpha <= 0, where both integrals still converge.
    """

    k: int
    alpha: float
    unproven: bool = False

    def __post_init__(self):
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 1:
            raise ValueError(f"k must be a positive integer, got {self.k!r}")
        if not math.isfinite(self.alpha):
            raise ValueError(f"alpha must be finite, got {self.alpha!r}")
        if self.unproven:
            if self.alpha <= -self.k:
                raise ValueError(f"alpha must exceed -k = {-self.k}, got {self.alpha}")
        elif self.alpha <= 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")

    @property
    def coefficient(self) -> float:
        return (self.alpha - (self.k - 1)) / self.k

    def i_integrand(self) -> SechExpIntegrand:
        return SechExpIntegrand(self.alpha, self.k + 1, unproven=self.unproven)

    def j_integrand(self) -> SechExpIntegrand:
        return SechExpIntegrand(self.alpha + 1.0, self.k, unproven=self.unproven)


@dataclass(frozen=True)
class TermVerification:
    """One evaluated term: ``combination = scale * (I + coefficient * J)``.

    ``scale`` is 1 for half-line integrals and 1/2 for full-line ones.
    """

    params: IdentityParams
    i_result: QuadratureResult
    j_result: QuadratureResult
    coefficient: float
    combination: float
    expected: float
    residual: float
    scale: float = 1.0

    @property
    def converged(self) -> bool:
        return self.i_result.converged and self.j_result.converged

    @property
    def error_budget(self) -> float:
        """Bound on the combination's quadrature error from the two estimates."""
        return abs(self.scale) * (self.i_result.error_estimate
                                  + abs(self.coefficient) * self.j_result.error_estimate)

    def passes(self, tol: float) -> bool:
        """True if both integrals converged and the residual is within ``tol``
        even after adding the quadrature error budget."""
        return self.converged and self.residual + self.error_budget <= tol


@dataclass(frozen=True)
class HarmonicReport:
    n: int
    alpha: float
    terms: tuple[TermVerification, ...]
    integral_sum: float
    exact_value: Fraction
    abs_error: float
    all_converged: bool

    @property
    def error_budget(self) -> float:
        return math.fsum(t.error_budget for t in self.terms)


def i_integral(params: IdentityParams, config: QuadratureConfig = DEFAULT_CONFIG) -> QuadratureResult:
    return integrate_half_line(params.i_integrand(), config)


def j_integral(params: IdentityParams, config: QuadratureConfig = DEFAULT_CONFIG) -> QuadratureResult:
    return integrate_half_line(params.j_integrand(), config)


def _term(params, i_result, j_result, coefficient, scale=1.0):
    combination = scale * (i_result.value + coefficient * j_result.value)
    expected = 1.0 / params.k
    return TermVerification(params, i_result, j_result, coefficient, combination,
                            expected, abs(combination - expected), scale)


def verify_term(params: IdentityParams, config: QuadratureConfig = DEFAULT_CONFIG) -> TermVerification:
    """Evaluate I_{k+1} and J_k and compare their combination with 1/k."""
    return _term(params, i_integral(params, config), j_integral(params, config), params.coefficient)


def _coefficient(params, n, denominator):
    if denominator == "k":
        return params.coefficient
    if denominator == "n":
        return (params.alpha - (params.k - 1)) / n
    raise ValueError(f"denominator must be one of {DENOMINATORS}, got {denominator!r}")


def _report(n, alpha, terms):
    integral_sum = 0.0
    for term in terms:  # ascending k, plain left-to-right
        integral_sum += term.combination
    exact = harmonic_exact(n)
    return HarmonicReport(n, alpha, tuple(terms), integral_sum, exact,
                          abs(integral_sum - float(exact)),
                          all(t.converged for t in terms))


def harmonic_via_integrals(n: int, alpha: float, config: QuadratureConfig = DEFAULT_CONFIG,
                           *, denominator: str = "k", unproven: bool = False) -> HarmonicReport:
    """Rebuild H_n from the half-line integrals for k = 1..n.

    ``denominator="n"`` divides every J coefficient by n instead of k.  That
    variant is wrong for n > 1 and is kept only so the difference can be
    demonstrated.
    """
    harmonic_exact(n)  # validates n
    terms = []
    for k in range(1, n + 1):
        params = IdentityParams(k, alpha, unproven)
        coefficient = _coefficient(params, n, denominator)
        terms.append(_term(params, i_integral(params, config), j_integral(params, config), coefficient))
    return _report(n, alpha, terms)


def harmonic_via_full_line(n: int, alpha: float, config: QuadratureConfig = DEFAULT_CONFIG,
                           *, denominator: str = "k") -> HarmonicReport:
    """Rebuild H_n from integrals over the whole real line, halved."""
    harmonic_exact(n)
    terms = []
    for k in range(1, n + 1):
        params = IdentityParams(k, alpha)
        i_full = integrate_even_full_line(params.i_integrand().even, config)
        j_full = integrate_even_full_line(params.j_integrand().even, config)
        terms.append(_term(params, i_full, j_full, _coefficient(params, n, denominator), scale=0.5))
    return _report(n, alpha, terms)


def harmonic_via_euler(n: int, config: QuadratureConfig = DEFAULT_CONFIG) -> QuadratureResult:
    """H_n as the integral of (1 - x^n)/(1 - x) over [0, 1]."""
    return integrate_finite(EulerIntegrand(n), 0.0, 1.0, config)
