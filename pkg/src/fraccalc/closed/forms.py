from __future__ import annotations

import math
from enum import Enum
from fractions import Fraction
from typing import List, Tuple

from ..errors import DomainError
from ..special.functions import EULER_GAMMA, digamma, gamma, gamma_ratio_limit
from ..utils.math_utils import as_exact, factorial_ratio, harmonic_fraction, is_integer
from .terms import ClosedFormExpr, Coeff, LogPowerTerm, combine


class Region(str, Enum):
	ZERO = "Zero"
	UPPER = "Upper"
	LOW = "Low"
	LOG = "Log"


def classify_region(sigma: float, r: float) -> Region:
	"""Which of the four (σ, r) regions the pair falls in; boundaries as in the integer table."""
	if r >= 0:
		return Region.UPPER if r >= sigma else Region.ZERO
	return Region.LOG if r >= sigma else Region.LOW


def _sign(k: int) -> int:
	return -1 if k % 2 else 1


def _exact_power_coeff(sigma: int, r: int) -> Fraction:
	"""Γ(1+r)/Γ(1+r−σ) for integer r >= 0 and integer σ; 0 past the denominator pole."""
	if 1 + r - sigma <= 0:
		return Fraction(0)
	return factorial_ratio(r, r - sigma)


def d_power(sigma: float, r: float, a: float = 0.0) -> ClosedFormExpr:
	"""
	D^σ of x^r from lower limit a, r > -1.

	Γ(1+r)/Γ(1+r−σ)·x^{r−σ}. Integration orders (σ < 0) carry the same
	monomial evaluated at a as lower-limit term; at a = 0 that term is omitted
	and needs r − σ > 0. Integer (σ, r) give exact rational coefficients.

	For a > 0 this is the true integral from a only at σ = −1 (and σ = 0):
	other orders leave out the further terms in powers of a, and
	derivative orders drop the lower limit altogether.
	"""
	if r <= -1:
		raise DomainError(f"d_power needs r > -1, got r={r}")
	if a < 0:
		raise DomainError(f"d_power needs a >= 0, got a={a}")
	sigma = as_exact(sigma)
	r = as_exact(r)
	if sigma < 0 and a == 0 and r - sigma <= 0:
		raise DomainError(f"d_power at a=0 needs r - sigma > 0, got r={r}, sigma={sigma}")
	if isinstance(sigma, int) and isinstance(r, int):
		coeff = _exact_power_coeff(sigma, r)
	else:
		coeff = gamma_ratio_limit(r, sigma)
	if coeff == 0:
		return ClosedFormExpr.zero()
	power = as_exact(r - sigma)
	term = LogPowerTerm(coeff, power, 0)
	if sigma < 0 and a > 0:
		return ClosedFormExpr(terms=(term,), lower_limit_terms=(term,), lower_limit=float(a))
	return ClosedFormExpr(terms=(term,))


def d_log(sigma: float) -> ClosedFormExpr:
	"""
	D^σ of log x from lower limit 0.

	x^{−σ}/Γ(1−σ)·(log x − ψ(1−σ) − γ). Integer σ = −n <= 0 is the n-fold
	integral x^n/n!·(log x − h(n)); integer σ >= 1 is the classical derivative
	(−1)^{σ−1}(σ−1)!·x^{−σ}. Both integer branches are exact.
	"""
	sigma = as_exact(sigma)
	if isinstance(sigma, int):
		if sigma <= 0:
			n = -sigma
			c = Fraction(1, math.factorial(n))
			return ClosedFormExpr(terms=(
				LogPowerTerm(c, n, 1),
				LogPowerTerm(-c * harmonic_fraction(n), n, 0),
			))
		return ClosedFormExpr.monomial(_sign(sigma - 1) * math.factorial(sigma - 1), -sigma)
	c = 1.0 / gamma(1.0 - sigma)
	return ClosedFormExpr(terms=(
		LogPowerTerm(c, -sigma, 1),
		LogPowerTerm(-c * (digamma(1.0 - sigma) + EULER_GAMMA), -sigma, 0),
	))


def d_power_log(sigma: float, r: float) -> ClosedFormExpr:
	"""
	D^σ of x^r·log x from lower limit 0, r > -1.

	Γ(1+r)/Γ(1+r−σ)·x^{r−σ}·(log x + ψ(1+r) − ψ(1+r−σ)); when 1+r−σ = −k
	is a pole the log term drops and Γ(1+r)·(−1)^k·k!·x^{r−σ} remains.
	"""
	if r <= -1:
		raise DomainError(f"d_power_log needs r > -1, got r={r}")
	sigma = as_exact(sigma)
	r = as_exact(r)
	power = as_exact(r - sigma)
	den = 1 + r - sigma
	exact = isinstance(sigma, int) and isinstance(r, int)
	if is_integer(den) and den <= 0:
		k = int(-den)
		if exact:
			return ClosedFormExpr.monomial(_sign(k) * math.factorial(r) * math.factorial(k), power)
		return ClosedFormExpr.monomial(gamma(1.0 + r) * _sign(k) * math.factorial(k), power)
	if exact:
		c = factorial_ratio(r, r - sigma)
		shift = harmonic_fraction(r) - harmonic_fraction(r - sigma)
	else:
		c = gamma_ratio_limit(r, sigma)
		shift = digamma(1.0 + r) - digamma(float(den))
	return ClosedFormExpr(terms=(
		LogPowerTerm(c, power, 1),
		LogPowerTerm(c * shift, power, 0),
	))


def d_power_extended(sigma: float, r: float) -> ClosedFormExpr:
	"""
	D^σ of x^r for any real r, up to omitted lower-limit constants.

	Negative integer r = −k maps onto the log family,
	(−1)^{k−1}/(k−1)!·D^{σ+k} log x; every other r is the pole-aware limit
	of the power rule.
	"""
	sigma = as_exact(sigma)
	r = as_exact(r)
	if isinstance(r, int) and r <= -1:
		k = -r
		scale = Fraction(_sign(k - 1), math.factorial(k - 1))
		return d_log(as_exact(sigma + k)).scaled(scale)
	if isinstance(sigma, int) and isinstance(r, int):
		coeff = _exact_power_coeff(sigma, r)
	else:
		coeff = gamma_ratio_limit(r, sigma)
	if coeff == 0:
		return ClosedFormExpr.zero()
	return ClosedFormExpr.monomial(coeff, r - sigma)


def d_int_power(n: int, m: int, a: float = 0.0) -> ClosedFormExpr:
	"""
	Integer-order operator D^n on x^m, from lower limit a.

	m >= 0: zero when m < n, else m!/(m−n)!·x^{m−n}.
	m < 0, m < n: (−1)^n (|m|−1+n)!/(|m|−1)!·x^{m−n}.
	m < 0, m >= n: the log family, only defined for a = 0.
	Integration orders with a > 0 carry the monomial at a as lower-limit term,
	which is the full integral from a only for n = −1.
	"""
	if not (is_integer(n) and is_integer(m)):
		raise DomainError(f"d_int_power needs integers, got n={n}, m={m}")
	n = int(n)
	m = int(m)
	if a < 0:
		raise DomainError(f"d_int_power needs a >= 0, got a={a}")
	if m >= 0:
		if m < n:
			return ClosedFormExpr.zero()
		coeff = factorial_ratio(m, m - n)
	elif m < n:
		k = -m
		coeff = _sign(n) * factorial_ratio(k - 1 + n, k - 1)
	else:
		if a > 0:
			raise DomainError(f"the log branch (m={m} >= n={n}, m < 0) needs a = 0, got a={a}")
		k = -m
		scale = Fraction(_sign(k - 1), math.factorial(k - 1))
		return d_log(n - m).scaled(scale)
	term = LogPowerTerm(coeff, m - n, 0)
	if n < 0 and a > 0:
		return ClosedFormExpr(terms=(term,), lower_limit_terms=(term,), lower_limit=float(a))
	return ClosedFormExpr(terms=(term,))


def apply_order(expr: ClosedFormExpr, sigma: float) -> ClosedFormExpr:
	"""D^σ from 0 applied term by term to x^p and x^p·log x terms (p > -1)."""
	if expr.lower_limit_terms:
		raise DomainError("apply_order works on expressions with lower limit 0 only")
	parts: List[Tuple[Coeff, ClosedFormExpr]] = []
	for t in expr.terms:
		if float(t.power) <= -1:
			raise DomainError(f"apply_order needs powers > -1, got {t.power}")
		if t.log_power:
			parts.append((t.coeff, d_power_log(sigma, t.power)))
		else:
			parts.append((t.coeff, d_power_extended(sigma, t.power)))
	return combine(*parts)
