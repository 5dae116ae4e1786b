from __future__ import annotations

import math
from typing import Sequence

from numpy.polynomial import Polynomial

from ..errors import DivergentLimit, PoleError
from ..utils.math_utils import is_integer, is_nonpositive_integer

EULER_GAMMA = 0.5772156649015329

# Lanczos g=7, n=9
_LANCZOS_G = 7.0
_LANCZOS_COEF: Sequence[float] = (
	0.99999999999980993,
	676.5203681218851,
	-1259.1392167224028,
	771.32342877765313,
	-176.61502916214059,
	12.507343278686905,
	-0.13857109526572012,
	9.9843695780195716e-6,
	1.5056327351493116e-7,
)
_HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)

# B_2, B_4, ..., B_20
_BERNOULLI_EVEN: Sequence[float] = (
	1.0 / 6.0,
	-1.0 / 30.0,
	1.0 / 42.0,
	-1.0 / 30.0,
	5.0 / 66.0,
	-691.0 / 2730.0,
	7.0 / 6.0,
	-3617.0 / 510.0,
	43867.0 / 798.0,
	-174611.0 / 330.0,
)

_ASYMPTOTIC_FROM = 10.0
# integer shifts up to this size use the finite product in gamma_ratio_limit
_PRODUCT_MAX = 64
_LOG_MAX = math.log(1.7976931348623157e308)


def _check_pole(name: str, x: float) -> None:
	if is_nonpositive_integer(x):
		raise PoleError(f"{name}({x}) is a pole (non-positive integer argument)")


def _ln_gamma_lanczos(x: float) -> float:
	z = x - 1.0
	acc = _LANCZOS_COEF[0]
	for i in range(1, len(_LANCZOS_COEF)):
		acc += _LANCZOS_COEF[i] / (z + i)
	t = z + _LANCZOS_G + 0.5
	return _HALF_LOG_2PI + (z + 0.5) * math.log(t) - t + math.log(acc)


def ln_gamma(x: float) -> float:
	"""log|Γ(x)|. Lanczos for x >= 1/2, reflection below."""
	x = float(x)
	_check_pole("ln_gamma", x)
	if x == 1.0 or x == 2.0:
		return 0.0
	if x < 0.5:
		return math.log(math.pi / abs(math.sin(math.pi * x))) - _ln_gamma_lanczos(1.0 - x)
	return _ln_gamma_lanczos(x)


def sign_gamma(x: float) -> float:
	"""Sign of Γ(x) for x off the poles."""
	x = float(x)
	_check_pole("sign_gamma", x)
	if x > 0.0:
		return 1.0
	return -1.0 if int(math.floor(x)) % 2 else 1.0


def gamma(x: float) -> float:
	"""Γ(x), exact for small positive integers; ±inf past the double range."""
	x = float(x)
	_check_pole("gamma", x)
	if is_integer(x) and x <= 171.0:
		return float(math.factorial(int(x) - 1))
	lg = ln_gamma(x)
	s = sign_gamma(x)
	if lg > _LOG_MAX:
		return s * math.inf
	return s * math.exp(lg)


def _cot_derivative(m: int, x: float) -> float:
	"""d^m/dx^m cot(πx), through the polynomial P_m with cot^(m)(y) = P_m(cot y)."""
	p = Polynomial([0.0, 1.0])
	for _ in range(m):
		p = p.deriv() * Polynomial([-1.0, 0.0, -1.0])
	return math.pi ** m * float(p(1.0 / math.tan(math.pi * (x - math.floor(x)))))


def digamma(x: float) -> float:
	"""ψ(x): reflection below 0, upward recurrence to x >= 10, then the asymptotic series."""
	x = float(x)
	_check_pole("digamma", x)
	if x < 0.0:
		return digamma(1.0 - x) - math.pi * _cot_derivative(0, x)
	acc = 0.0
	while x < _ASYMPTOTIC_FROM:
		acc -= 1.0 / x
		x += 1.0
	inv2 = 1.0 / (x * x)
	series = 0.0
	p = inv2
	for k, b in enumerate(_BERNOULLI_EVEN, start=1):
		series += b / (2 * k) * p
		p *= inv2
	return acc + math.log(x) - 0.5 / x - series


def polygamma(m: int, x: float) -> float:
	"""ψ^(m)(x) for integer m >= 0; negative x through the m-th derivative of the reflection formula."""
	if not is_integer(m) or m < 0:
		raise ValueError(f"polygamma order must be a non-negative integer, got m={m}")
	m = int(m)
	if m == 0:
		return digamma(x)
	x = float(x)
	_check_pole("polygamma", x)
	sign = -1.0 if m % 2 else 1.0  # (-1)^m
	if x < 0.0:
		return sign * polygamma(m, 1.0 - x) - math.pi * _cot_derivative(m, x)
	m_fact = float(math.factorial(m))
	acc = 0.0
	# higher orders need a larger argument before the series settles
	start = _ASYMPTOTIC_FROM + m
	while x < start:
		acc -= sign * m_fact / x ** (m + 1)
		x += 1.0
	series = math.factorial(m - 1) / x ** m + m_fact / (2.0 * x ** (m + 1))
	for k, b in enumerate(_BERNOULLI_EVEN, start=1):
		series += b * math.factorial(2 * k + m - 1) / math.factorial(2 * k) / x ** (2 * k + m)
	return acc - sign * series


def _gamma_ratio(p: float, q: float) -> float:
	"""Γ(p)/Γ(q) for p, q off the poles."""
	if is_integer(p) and is_integer(q) and 0 < p <= 171 and 0 < q <= 171:
		return math.factorial(int(p) - 1) / math.factorial(int(q) - 1)
	return sign_gamma(p) * sign_gamma(q) * math.exp(ln_gamma(p) - ln_gamma(q))


def _shifted_product(p: float, n: int) -> float:
	"""Γ(p)/Γ(p−n) as the finite product (p−1)…(p−n), or its reciprocal for n < 0."""
	if n >= 0:
		return math.prod(p - k for k in range(1, n + 1))
	return 1.0 / math.prod(p + k for k in range(-n))


def gamma_ratio_limit(r: float, sigma: float) -> float:
	"""
	lim_{ε→0} Γ(1+r+ε)/Γ(1+r−σ+ε).

	Plain ratio off the poles, 0 when only the denominator sits on a pole,
	the ratio of residues when both do; a lone numerator pole diverges.
	"""
	num = 1.0 + float(r)
	den = 1.0 + float(r) - float(sigma)
	num_pole = is_nonpositive_integer(num)
	den_pole = is_nonpositive_integer(den)
	if not num_pole:
		if den_pole:
			return 0.0
		if is_integer(sigma) and abs(sigma) <= _PRODUCT_MAX:
			return _shifted_product(num, int(sigma))
		return _gamma_ratio(num, den)
	if not den_pole:
		raise DivergentLimit(
			f"Γ(1+r)/Γ(1+r-σ) diverges for r={r}, sigma={sigma}: numerator pole is not cancelled"
		)
	# Γ(-j+ε)/Γ(-l+ε) -> (-1)^(j-l) l!/j!
	j = int(round(-num))
	l = int(round(-den))
	sign = -1.0 if (j - l) % 2 else 1.0
	return sign * math.factorial(l) / math.factorial(j)
