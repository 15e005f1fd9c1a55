import math
from fractions import Fraction

import pytest

from harmonic_integrals.exact_core import harmonic_exact
from harmonic_integrals.identity_verifier import (
    IdentityParams,
    harmonic_via_euler,
    harmonic_via_full_line,
    harmonic_via_integrals,
    i_integral,
    j_integral,
    verify_term,
)
from harmonic_integrals.quadrature import QuadratureConfig, QuadratureResult
from oracles import mp_sech_exp

CFG = QuadratureConfig()
ALPHAS = (0.1, 0.5, 1.0, 2.0, 5.0, 10.0)


@pytest.mark.parametrize("k, alpha", [(0, 1.0), (1, 0.0), (1, -0.5), (2, math.nan)])
def test_params_validation(k, alpha):
    with pytest.raises(ValueError):
        IdentityParams(k, alpha)


def test_i_integral_examples():
    v1 = i_integral(IdentityParams(1, 1.0), CFG).value
    assert 0 < v1 < 1
    # Simpson oracle, [0, 60], 10^6 panels
    assert v1 == pytest.approx(0.5707963267948968, abs=1e-9)
    big = i_integral(IdentityParams(1, 100.0), CFG).value
    assert big == pytest.approx(0.01, rel=0.02)
    assert big == pytest.approx(0.009998001597292399, abs=1e-12)
    assert 0 < i_integral(IdentityParams(2, 0.5), CFG).value < i_integral(IdentityParams(1, 0.5), CFG).value


def test_j_integral_examples():
    i1 = i_integral(IdentityParams(1, 1.0), CFG).value
    assert j_integral(IdentityParams(1, 1.0), CFG).value == pytest.approx(1 - i1, abs=1e-9)
    i2 = i_integral(IdentityParams(1, 2.0), CFG).value
    assert j_integral(IdentityParams(1, 2.0), CFG).value == pytest.approx((1 - i2) / 2, abs=1e-9)
    assert 0 < j_integral(IdentityParams(3, 1.0), CFG).value < j_integral(IdentityParams(1, 1.0), CFG).value


@pytest.mark.parametrize("k, alpha", [(1, 1.0), (4, 0.5), (10, 10.0)])
def test_integrals_against_mpmath(k, alpha):
    p = IdentityParams(k, alpha)
    assert i_integral(p, CFG).value == pytest.approx(float(mp_sech_exp(alpha, k + 1)), abs=1e-12)
    assert j_integral(p, CFG).value == pytest.approx(float(mp_sech_exp(alpha + 1, k)), abs=1e-12)


@pytest.mark.parametrize("k, alpha, coefficient", [(1, 1.0, 1.0), (4, 0.5, -0.625), (10, 10.0, 0.1)])
def test_verify_term_examples(k, alpha, coefficient):
    t = verify_term(IdentityParams(k, alpha), CFG)
    assert t.expected == 1 / k
    assert t.coefficient == pytest.approx(coefficient, abs=1e-15)
    assert t.residual <= 1e-9
    assert t.converged
    assert t.combination == t.i_result.value + t.coefficient * t.j_result.value
    assert t.residual == abs(t.combination - t.expected)


def test_per_term_grid():
    for k in range(1, 21):
        for alpha in ALPHAS:
            t = verify_term(IdentityParams(k, alpha), CFG)
            assert t.converged
            assert t.residual <= 1e-8, (k, alpha)


@pytest.mark.parametrize("k", range(2, 12))
def test_zero_coefficient(k):
    t = verify_term(IdentityParams(k, float(k - 1)), CFG)
    assert t.coefficient == 0.0
    assert t.combination == t.i_result.value
    assert t.residual <= 1e-8


def test_sign_regions():
    for k, alpha in [(6, 0.5), (6, 5.0), (6, 7.5)]:
        assert verify_term(IdentityParams(k, alpha), CFG).residual <= 1e-8


def test_unproven_region_still_balances():
    # outside alpha > 0 both integrals exist for alpha > -k (exploratory only)
    for k, alpha in [(3, -0.5), (5, -2.0)]:
        with pytest.raises(ValueError):
            IdentityParams(k, alpha)
        t = verify_term(IdentityParams(k, alpha, unproven=True), CFG)
        assert t.converged
        assert t.residual <= 1e-8


def test_harmonic_via_integrals_examples():
    r = harmonic_via_integrals(1, 1.0, CFG)
    assert r.abs_error <= 1e-9
    r = harmonic_via_integrals(5, 1.0, CFG)
    assert r.exact_value == Fraction(137, 60)
    assert r.integral_sum == pytest.approx(2.283333333333, abs=1e-9)
    assert r.abs_error <= 5e-9
    r = harmonic_via_integrals(10, 3.7, CFG)
    assert r.abs_error <= 1e-8
    assert r.all_converged
    assert r.abs_error <= r.error_budget


def test_report_consistency():
    r = harmonic_via_integrals(7, 0.3, CFG)
    total = 0.0
    for t in r.terms:
        total += t.combination
    assert r.integral_sum == total
    assert [t.params.k for t in r.terms] == list(range(1, 8))
    assert r.abs_error == abs(r.integral_sum - float(harmonic_exact(7)))


def test_alpha_invariance():
    for n in (1, 4, 10):
        reports = [harmonic_via_integrals(n, a, CFG) for a in (0.1, 1.0, 10.0)]
        for a in reports:
            for b in reports:
                assert abs(a.integral_sum - b.integral_sum) <= 2 * (a.error_budget + b.error_budget)


def test_full_line_examples():
    assert harmonic_via_full_line(1, 1.0, CFG).integral_sum == pytest.approx(1.0, abs=1e-9)
    assert harmonic_via_full_line(3, 2.0, CFG).integral_sum == pytest.approx(11 / 6, abs=1e-9)
    for n, alpha in [(2, 0.1), (6, 4.2)]:
        full = harmonic_via_full_line(n, alpha, CFG)
        half = harmonic_via_integrals(n, alpha, CFG)
        assert abs(full.integral_sum - half.integral_sum) <= 1e-12
        assert all(t.scale == 0.5 for t in full.terms)


def test_denominator_n_reading_fails():
    literal = harmonic_via_integrals(3, 1.0, CFG, denominator="n")
    fixed = harmonic_via_integrals(3, 1.0, CFG)
    assert literal.abs_error > 0.01
    assert fixed.abs_error <= 1e-7
    # for n = 1 both readings coincide
    assert harmonic_via_integrals(1, 2.0, CFG, denominator="n").abs_error <= 1e-9
    with pytest.raises(ValueError):
        harmonic_via_integrals(3, 1.0, CFG, denominator="m")


@pytest.mark.parametrize("n, expected, tol", [(1, 1.0, 1e-12), (4, 25 / 12, 1e-10), (50, None, 1e-9)])
def test_harmonic_via_euler(n, expected, tol):
    expected = float(harmonic_exact(n)) if expected is None else expected
    r = harmonic_via_euler(n, CFG)
    assert r.converged
    assert r.value == pytest.approx(expected, abs=tol)


def test_representations_agree():
    for n in range(1, 11):
        values = [
            float(harmonic_exact(n)),
            harmonic_via_euler(n, CFG).value,
            harmonic_via_integrals(n, 1.5, CFG).integral_sum,
            harmonic_via_full_line(n, 1.5, CFG).integral_sum,
        ]
        assert max(values) - min(values) <= 1e-8


def test_nonconverged_subresult_propagates():
    from harmonic_integrals.identity_verifier import _term
    p = IdentityParams(2, 1.0)
    good = QuadratureResult(0.5, 1e-13, 15, True)
    bad = QuadratureResult(0.3, 1e-3, 15, False)
    t = _term(p, good, bad, p.coefficient)
    assert not t.converged
    assert not t.passes(1.0)


def test_passes_accounts_for_error_budget():
    t = verify_term(IdentityParams(2, 1.0), CFG)
    assert t.passes(1e-8)
    assert not t.passes(1e-30)
