from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fraccalc.closed import ClosedFormExpr, LogPowerTerm, apply_order, canonical_power, combine, d_log, d_power


def test_like_terms_merge_and_stay_exact():
	e = ClosedFormExpr(terms=(LogPowerTerm(1, 2), LogPowerTerm(Fraction(1, 2), 2), LogPowerTerm(3, 1)))
	assert e.coefficient(2) == Fraction(3, 2)
	assert e.is_exact()
	# highest power first
	assert [t.power for t in e.terms] == [2, 1]


def test_cancellation_gives_zero():
	e = ClosedFormExpr.monomial(Fraction(2, 3), 4, 1)
	assert (e - e).is_zero()
	assert (e - e).render() == "0"


def test_differentiate_power_and_log():
	assert ClosedFormExpr.monomial(Fraction(1, 6), 3).differentiate() == ClosedFormExpr.monomial(Fraction(1, 2), 2)
	# D(x log x) = log x + 1
	d = ClosedFormExpr.monomial(1, 1, 1).differentiate()
	assert d.coefficient(0, 1) == 1
	assert d.coefficient(0, 0) == 1


def test_lower_limit_terms_are_subtracted():
	# ∫_1^x t dt = x^2/2 - 1/2
	e = d_power(-1, 1, a=1.0)
	assert e.evaluate(3.0) == pytest.approx(4.0)
	assert e.evaluate(1.0) == pytest.approx(0.0, abs=1e-15)


def test_add_rejects_mixed_lower_limits():
	with pytest.raises(ValueError):
		d_power(-1, 1, a=1.0) + d_power(-1, 1, a=2.0)


def test_combine_and_render():
	e = combine((2, ClosedFormExpr.monomial(1, 1)), (-1, ClosedFormExpr.monomial(1, 0.5, 1)))
	assert e.render() == "2.0000000000000000e+00 x - 1.0000000000000000e+00 x^0.5 log x"
	assert ClosedFormExpr.monomial(-3, -2).render() == "-3.0000000000000000e+00 x^-2"


def test_coefficient_gap_treats_missing_terms_as_zero():
	a = ClosedFormExpr.monomial(1.0, 2) + ClosedFormExpr.monomial(1e-20, 1)
	b = ClosedFormExpr.monomial(1.0 + 1e-14, 2)
	assert a.coefficient_gap(b) <= 1e-12
	assert a.coefficient_gap(ClosedFormExpr.monomial(1.1, 2)) > 0.05
	assert ClosedFormExpr.monomial(Fraction(1, 3), 2).coefficient_gap(ClosedFormExpr.monomial(Fraction(1, 3), 2)) == 0.0


def test_float_powers_are_canonical():
	assert canonical_power(1 + 1.3 + 1.3) == canonical_power(3.6)
	assert canonical_power(Fraction(1, 3)) == Fraction(1, 3)
	assert LogPowerTerm(1.0, 3.5999999999999996).key() == LogPowerTerm(1.0, 3.6).key()


def test_repeated_float_orders_land_on_one_term():
	twice = apply_order(apply_order(ClosedFormExpr.monomial(1, 1), -1.3), -1.3)
	once = apply_order(ClosedFormExpr.monomial(1, 1), -2.6)
	assert [t.power for t in twice.terms] == [t.power for t in once.terms]
	assert twice.coefficient_gap(once) <= 1e-12
	diff = twice - once
	assert len(diff.terms) <= 1
	assert abs(float(diff.coefficient(3.6))) <= 1e-12


@given(
	st.floats(-5.0, 5.0, allow_nan=False, allow_infinity=False),
	st.floats(-5.0, 5.0, allow_nan=False, allow_infinity=False),
	st.floats(0.1, 4.0, allow_nan=False, allow_infinity=False),
)
@settings(max_examples=200, deadline=None)
def test_linear_combination_closure(alpha, beta, x):
	f, g = d_power(-0.5, 0.5), d_log(-0.5)
	both = combine((alpha, f), (beta, g))
	want = alpha * f.evaluate(x) + beta * g.evaluate(x)
	assert both.evaluate(x) == pytest.approx(want, rel=1e-12, abs=1e-12)
