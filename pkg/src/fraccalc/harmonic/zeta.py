from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional

import numpy as np

from ..closed.forms import d_log
from ..closed.terms import ClosedFormExpr
from ..errors import DomainError, PoleError
from ..quadrature.rl import Integrand, QuadratureConfig, rl_apply
from ..special.functions import EULER_GAMMA, digamma, gamma, ln_gamma, polygamma
from ..utils.math_utils import compensated_sum, harmonic_fraction, is_integer, is_nonpositive_integer

# exact rational accumulation up to here, compensated floats beyond
EXACT_SUM_MAX = 30


def _check_rho(rho: float) -> None:
	if is_nonpositive_integer(1.0 + float(rho)):
		raise PoleError(f"h(rho) has a pole at rho={rho}")


def harmonic_int(n: int) -> float:
	"""h(n) = Σ_{k=1}^n 1/k, h(0) = 0."""
	if not is_integer(n) or n < 0:
		raise DomainError(f"harmonic_int needs an integer n >= 0, got {n}")
	n = int(n)
	if n <= EXACT_SUM_MAX:
		return float(harmonic_fraction(n))
	return compensated_sum(1.0 / k for k in range(1, n + 1))


def harmonic_ext(rho: float) -> float:
	"""h(ρ) = ψ(1+ρ) + γ, the continuation of h(n) to real ρ."""
	_check_rho(rho)
	return digamma(1.0 + float(rho)) + EULER_GAMMA


def harmonic_via_integral(rho: float, x: float, cfg: Optional[QuadratureConfig] = None) -> float:
	"""
	h(ρ) = log x − Γ(1+ρ)/x^ρ · D^{−ρ} log (x).

	ρ > 0 integrates numerically; −1 < ρ <= 0 uses the closed form of the
	inner integral. The result does not depend on x.
	"""
	if x <= 0:
		raise DomainError(f"harmonic_via_integral needs x > 0, got x={x}")
	if rho <= -1:
		raise DomainError(f"harmonic_via_integral needs rho > -1, got rho={rho}")
	rho = float(rho)
	if rho > 0:
		inner = rl_apply(Integrand.log(), -rho, x, 0.0, cfg)
	else:
		inner = d_log(-rho).evaluate(x)
	return math.log(x) - gamma(1.0 + rho) / x ** rho * inner


def harmonic_eps(rho: float, x: float, eps: float) -> float:
	"""
	log x − (Γ(1+ε)Γ(1+ρ)/Γ(1+ε+ρ)·x^ε − 1)/ε, the expression whose ε -> 0
	limit is h(ρ). Converges linearly in ε.
	"""
	if x <= 0 or eps <= 0 or rho <= -1:
		raise DomainError(f"harmonic_eps needs x > 0, eps > 0, rho > -1; got x={x}, eps={eps}, rho={rho}")
	log_ratio = ln_gamma(1.0 + eps) + ln_gamma(1.0 + rho) - ln_gamma(1.0 + eps + rho) + eps * math.log(x)
	return math.log(x) - math.expm1(log_ratio) / eps


def generating_integral_log(rho: float) -> ClosedFormExpr:
	"""ρ-fold integral of log x from 0: x^ρ/Γ(1+ρ)·(log x − ψ(1+ρ) − γ)."""
	if is_integer(rho) and rho < 0:
		raise PoleError(f"Γ(1+rho) has a pole at rho={rho}")
	return d_log(-rho)


def zeta_partial(m: int, n: int) -> float:
	"""ζ(m|n) = (−1)^m/(m−1)!·(ψ^(m−1)(1) − ψ^(m−1)(1+n))."""
	if not is_integer(m) or m < 1:
		raise DomainError(f"zeta_partial needs an integer m >= 1, got m={m}")
	if not is_integer(n) or n < 0:
		raise DomainError(f"zeta_partial needs an integer n >= 0, got n={n}")
	m, n = int(m), int(n)
	if n == 0:
		return 0.0
	sign = -1.0 if m % 2 else 1.0
	diff = polygamma(m - 1, 1.0) - polygamma(m - 1, 1.0 + n)
	return sign / math.factorial(m - 1) * diff


def zeta_partial_direct(s: float, n: int) -> float:
	"""Σ_{k=1}^n k^{−s}; exact rationals for integer s and small n."""
	if not is_integer(n) or n < 0:
		raise DomainError(f"zeta_partial_direct needs an integer n >= 0, got n={n}")
	n = int(n)
	if n == 0:
		return 0.0
	if is_integer(s) and s >= 1 and n <= EXACT_SUM_MAX:
		s = int(s)
		return float(sum(Fraction(1, k ** s) for k in range(1, n + 1)))
	k = np.arange(1, n + 1, dtype=float)
	return compensated_sum(np.power(k, -float(s))[::-1])


def asymptotic_gap(n: int) -> float:
	"""h(n) − log n − γ, which lies in (0, 1/n)."""
	if not is_integer(n) or n < 1:
		raise DomainError(f"asymptotic_gap needs an integer n >= 1, got {n}")
	return harmonic_int(int(n)) - math.log(n) - EULER_GAMMA


def asymptotic_gaps(n_max: int) -> np.ndarray:
	"""asymptotic_gap(n) for n = 1..n_max from one running sum."""
	k = np.arange(1, int(n_max) + 1, dtype=float)
	return np.cumsum(1.0 / k) - np.log(k) - EULER_GAMMA
