import math

import pytest
from hypothesis import given, settings, strategies as st
from scipy import special as sp

from fraccalc.errors import DivergentLimit, PoleError
from fraccalc.special import EULER_GAMMA, digamma, gamma, gamma_ratio_limit, ln_gamma, polygamma


@pytest.mark.parametrize("x", [0.3, 1.5, 7.25, 50.0, -0.5, -2.5])
def test_ln_gamma_matches_scipy(x):
	assert ln_gamma(x) == pytest.approx(sp.gammaln(x), rel=1e-12, abs=1e-12)


def test_gamma_values_and_overflow():
	assert gamma(5) == 24.0
	assert gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-13)
	assert gamma(-0.5) == pytest.approx(-2.0 * math.sqrt(math.pi), rel=1e-13)
	assert gamma(200.5) == math.inf


@pytest.mark.parametrize("fn, x", [(gamma, 0.0), (gamma, -3.0), (digamma, -2.0), (ln_gamma, -1.0)])
def test_poles_raise(fn, x):
	with pytest.raises(PoleError):
		fn(x)


@pytest.mark.parametrize("x", [0.1, 0.5, 1.0, 1.4616321449683622, 2.5, 9.9, 10.0, 30.0])
def test_digamma_matches_scipy(x):
	assert digamma(x) == pytest.approx(sp.digamma(x), rel=1e-12, abs=1e-13)


def test_digamma_at_one_is_minus_euler():
	assert digamma(1.0) == pytest.approx(-EULER_GAMMA, abs=1e-15)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
@pytest.mark.parametrize("x", [0.5, 1.0, 3.7, 20.0])
def test_polygamma_matches_scipy(m, x):
	assert polygamma(m, x) == pytest.approx(float(sp.polygamma(m, x)), rel=1e-10)


def test_polygamma_rejects_bad_order():
	with pytest.raises(ValueError):
		polygamma(-1, 2.0)


def test_gamma_ratio_limit_cases():
	# plain ratio
	assert gamma_ratio_limit(0.5, -0.5) == pytest.approx(math.sqrt(math.pi) / 2.0, rel=1e-13)
	# denominator pole only
	assert gamma_ratio_limit(2, 3) == 0.0
	# Γ(-1+ε)/Γ(ε) -> -1
	assert gamma_ratio_limit(-2, -1) == -1.0
	assert gamma_ratio_limit(-3, -1) == -0.5
	with pytest.raises(DivergentLimit):
		gamma_ratio_limit(-2, 0.5)


@given(st.floats(min_value=0.05, max_value=50.0, allow_nan=False, allow_infinity=False))
@settings(max_examples=200, deadline=None)
def test_digamma_recurrence(x):
	assert digamma(x + 1.0) - digamma(x) == pytest.approx(1.0 / x, rel=1e-12, abs=1e-12)


@given(st.floats(min_value=0.01, max_value=0.99, allow_nan=False, allow_infinity=False))
@settings(max_examples=200, deadline=None)
def test_gamma_reflection(x):
	assert gamma(x) * gamma(1.0 - x) == pytest.approx(math.pi / math.sin(math.pi * x), rel=1e-11)


@pytest.mark.parametrize("x", [-0.5, -2.3, -7.9, -1e9 + 0.5])
def test_digamma_negative_arguments(x):
	assert digamma(x) == pytest.approx(sp.digamma(x), rel=1e-11, abs=1e-12)


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("x", [-0.5, -2.3, -4.75])
def test_polygamma_negative_arguments_match_recurrence(m, x):
	# walk up to the positive side: ψ^(m)(y+1) = ψ^(m)(y) + (-1)^m m!/y^(m+1)
	k = math.ceil(-x)
	sign = -1.0 if m % 2 else 1.0
	shift = math.fsum(sign * math.factorial(m) / (x + j) ** (m + 1) for j in range(k))
	assert polygamma(m, x) == pytest.approx(polygamma(m, x + k) - shift, rel=1e-10)


def test_polygamma_far_negative_is_reflected():
	# cot(πx) vanishes at half-integers, leaving ψ'(x) = π² - ψ'(1-x)
	assert polygamma(1, -1e9 + 0.5) == pytest.approx(math.pi ** 2 - polygamma(1, 1e9 + 0.5), rel=1e-9)


def test_integer_shift_ratio_is_a_product():
	assert gamma_ratio_limit(0.5, -1) == 1.0 / 1.5
	assert gamma_ratio_limit(2.25, 2) == 2.25 * 1.25
	assert gamma_ratio_limit(0.5, -2) == 1.0 / (1.5 * 2.5)
