"""Harmonic numbers: exact values, quadrature, and integral identities."""

from .exact_core import (
    EULER_GAMMA,
    EULER_GAMMA_DIGITS,
    ExactRational,
    estimate_gamma,
    harmonic_asymptotic,
    harmonic_exact,
    harmonic_float,
    harmonic_next,
)
from .identity_verifier import (
    HarmonicReport,
    IdentityParams,
    TermVerification,
    harmonic_via_euler,
    harmonic_via_full_line,
    harmonic_via_integrals,
    i_integral,
    j_integral,
    verify_term,
)
from .integrands import EulerIntegrand, SechExpIntegrand, euler_value, log_sech, sech_exp_value
from .quadrature import (
    AsymmetricIntegrandError,
    IntegrandEvaluationError,
    QuadratureConfig,
    QuadratureError,
    QuadratureResult,
    integrate_even_full_line,
    integrate_finite,
    integrate_half_line,
)

__version__ = "0.1.0"
