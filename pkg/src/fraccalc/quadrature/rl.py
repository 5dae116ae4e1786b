from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np
from numpy.polynomial import Polynomial

from ..errors import DomainError, StepUnderflow, ToleranceNotMet
from ..special.functions import gamma
from ..utils.math_utils import is_integer
from .rules import FrozenMesh, adaptive_mesh

logger = logging.getLogger(__name__)


@dataclass
class QuadratureConfig:
	abs_tol: float = 1e-10
	rel_tol: float = 1e-10
	max_subdivisions: int = 64
	base_nodes: int = 31
	# fractional derivatives; fd_step is in units of log(u - a)
	deriv_abs_tol: float = 1e-8
	deriv_rel_tol: float = 1e-6
	fd_step: float = 0.25
	fd_halvings: int = 4

	def __post_init__(self):
		if self.abs_tol <= 0 or self.rel_tol <= 0:
			raise ValueError(f"quadrature tolerances must be > 0, got abs_tol={self.abs_tol}, rel_tol={self.rel_tol}")
		if self.deriv_abs_tol <= 0 or self.deriv_rel_tol <= 0:
			raise ValueError("derivative tolerances must be > 0")
		if int(self.base_nodes) < 3:
			raise ValueError(f"base_nodes must be >= 3, got {self.base_nodes}")
		if int(self.max_subdivisions) < 0:
			raise ValueError(f"max_subdivisions must be >= 0, got {self.max_subdivisions}")
		if not self.fd_step > 0 or int(self.fd_halvings) < 1:
			raise ValueError(f"need fd_step > 0 and fd_halvings >= 1, got fd_step={self.fd_step}, fd_halvings={self.fd_halvings}")


@dataclass(frozen=True)
class QuadratureResult:
	value: float
	error: float
	subdivisions: int


@dataclass(frozen=True)
class Integrand:
	"""
	f(t) on (0, x]. When singular_at_zero, f behaves like t^zero_exponent
	(possibly times log t) near 0; zero_exponent goes into the Jacobi weight
	of the panel touching 0 and the mesh grades towards 0 for the rest.
	"""
	eval: Callable[[np.ndarray], np.ndarray]
	singular_at_zero: bool = False
	zero_exponent: float = 0.0
	label: str = "f"

	def __call__(self, t):
		return self.eval(t)

	@classmethod
	def power(cls, r: float) -> "Integrand":
		r = float(r)
		if is_integer(r) and r >= 0:
			k = int(r)
			return cls(lambda t: np.power(t, k), False, 0.0, f"t^{k}")
		return cls(lambda t: np.power(t, r), True, r, f"t^{r!r}")

	@classmethod
	def log(cls) -> "Integrand":
		return cls(np.log, True, 0.0, "log")

	@classmethod
	def power_log(cls, r: float) -> "Integrand":
		r = float(r)
		if r <= -1:
			raise DomainError(f"t^r log t needs r > -1, got r={r}")
		return cls(lambda t: np.power(t, r) * np.log(t), True, 0.0, f"t^{r!r} log")

	@classmethod
	def log_eps(cls, eps: float) -> "Integrand":
		"""(t^ε - 1)/ε, which tends to log t as ε -> 0."""
		eps = float(eps)
		if eps == 0.0:
			return cls.log()
		return cls(lambda t: np.expm1(eps * np.log(t)) / eps, True, 0.0, f"log_eps({eps!r})")

	def combine(self, alpha: float, other: "Integrand", beta: float) -> "Integrand":
		"""α·self + β·other."""
		singular = [g.zero_exponent for g in (self, other) if g.singular_at_zero]
		f, g = self.eval, other.eval
		return Integrand(
			lambda t: alpha * f(t) + beta * g(t),
			bool(singular),
			min(singular) if singular else 0.0,
			f"{alpha!r}*{self.label}+{beta!r}*{other.label}",
		)


def _check_interval(x: float, a: float) -> None:
	if not (0.0 <= a < x):
		raise DomainError(f"need 0 <= a < x, got a={a}, x={x}")


def _build(f: Integrand, mu: float, x: float, a: float, cfg: QuadratureConfig) -> Tuple[FrozenMesh, float, float, int]:
	"""Mesh for ∫_a^x f(t)(x-t)^{mu-1} dt, mu > 0 (no 1/Γ(mu) factor)."""
	graded = f.singular_at_zero and a == 0.0
	if graded and f.zero_exponent <= -1:
		raise DomainError(f"{f.label} is not integrable at 0 (exponent {f.zero_exponent})")
	mesh, value, error, subdivisions, converged = adaptive_mesh(
		f.eval,
		float(a),
		float(x),
		kernel_exp=float(mu) - 1.0,
		zero_exp=f.zero_exponent,
		graded_at_zero=graded,
		base_nodes=cfg.base_nodes,
		abs_tol=cfg.abs_tol,
		rel_tol=cfg.rel_tol,
		max_subdivisions=cfg.max_subdivisions,
	)
	if not converged:
		g = gamma(mu)
		raise ToleranceNotMet(
			f"quadrature of {f.label} at x={x} stopped after {subdivisions} subdivisions, error estimate {error / g:.3e}",
			estimate=error / g,
			value=value / g,
		)
	return mesh, value, error, subdivisions


def rl_integral_result(f: Integrand, sigma: float, x: float, a: float = 0.0, cfg: Optional[QuadratureConfig] = None) -> QuadratureResult:
	cfg = cfg or QuadratureConfig()
	if sigma >= 0:
		raise DomainError(f"rl_integral needs sigma < 0, got sigma={sigma}")
	_check_interval(x, a)
	mu = -float(sigma)
	_, value, error, subdivisions = _build(f, mu, x, a, cfg)
	g = gamma(mu)
	return QuadratureResult(value / g, error / g, subdivisions)


def rl_integral(f: Integrand, sigma: float, x: float, a: float = 0.0, cfg: Optional[QuadratureConfig] = None) -> float:
	"""(1/Γ(-σ)) ∫_a^x f(t)(x-t)^{-1-σ} dt for σ < 0."""
	return rl_integral_result(f, sigma, x, a, cfg).value


def default_order(sigma: float) -> int:
	"""Smallest integer m with m > 1 + σ for non-integer σ."""
	return int(math.floor(sigma)) + 2


def _central_weights(k: int) -> Tuple[np.ndarray, np.ndarray]:
	"""Offsets (in units of h) and weights of the central difference δ^k."""
	j = np.arange(k + 1)
	offsets = k / 2.0 - j
	weights = np.array([(-1) ** int(i) * math.comb(k, int(i)) for i in j], dtype=float)
	return offsets, weights


def _richardson(d0: np.ndarray, rounding: np.ndarray) -> Tuple[np.longdouble, float]:
	"""
	Extrapolate difference quotients taken at steps halved level by level,
	in powers of h². Returns the tableau entry with the smallest
	truncation-plus-rounding estimate.
	"""
	levels = len(d0)
	table = np.zeros((levels, levels), dtype=np.longdouble)
	table[:, 0] = d0
	for j in range(1, levels):
		factor = np.longdouble(4.0) ** j
		for i in range(j, levels):
			table[i, j] = table[i, j - 1] + (table[i, j - 1] - table[i - 1, j - 1]) / (factor - 1)
	best_val, best_err = table[0, 0], math.inf
	for i in range(1, levels):
		for j in range(1, i + 1):
			err = float(abs(table[i, j] - table[i, j - 1])) + float(rounding[i])
			if err < best_err:
				best_val, best_err = table[i, j], err
	return best_val, best_err


def rl_derivative(
	f: Integrand,
	sigma: float,
	x: float,
	a: float = 0.0,
	m: Optional[int] = None,
	cfg: Optional[QuadratureConfig] = None,
) -> float:
	"""
	D^σ f(x) for σ > 0 as the m-th derivative of the order m-σ integral.

	With L = u - a and μ = m - σ the inner integral is L^μ H(log L), where H
	is the frozen-mesh quadrature without its L^μ factor. In s = log L,
	L^m d^m/du^m (L^μ H) = L^μ P(d/ds) H with P(y) = Π_{j<m} (y + μ - j), so
	the derivatives H^(k)(s), k = 1..m, are taken by central differences in s
	(step fd_step, halved fd_halvings times, Richardson in h²) in extended
	precision and recombined with the coefficients of P.
	"""
	cfg = cfg or QuadratureConfig()
	if sigma <= 0:
		raise DomainError(f"rl_derivative needs sigma > 0, got sigma={sigma}")
	_check_interval(x, a)
	if m is None:
		m = default_order(sigma)
	if not is_integer(m) or m <= 1 + sigma:
		raise DomainError(f"rl_derivative needs integer m > 1 + sigma, got m={m}, sigma={sigma}")
	m = int(m)
	mu = m - float(sigma)
	mesh, _, _, _ = _build(f, mu, x, a, cfg)

	L = x - a
	levels = int(cfg.fd_halvings) + 1
	h = float(cfg.fd_step) / 2.0 ** np.arange(levels)
	# half-step grid s = j·h/2, |j| <= m, one row per level
	s = np.outer(h, np.arange(-m, m + 1) / 2.0).astype(np.longdouble)
	u = np.longdouble(a) + np.longdouble(L) * np.exp(s)
	H = np.asarray(mesh.evaluate(u.ravel(), dtype=np.longdouble, relative=True)).reshape(u.shape)
	row_scale = np.max(np.abs(H), axis=1).astype(float)

	eps = float(np.finfo(np.longdouble).eps)
	coeffs = Polynomial.fromroots([j - mu for j in range(m)]).coef
	total = np.longdouble(coeffs[0]) * H[0, m]
	total_err = 0.0
	for k in range(1, m + 1):
		offsets, weights = _central_weights(k)
		cols = np.rint(2.0 * offsets).astype(int) + m
		d0 = (H[:, cols] * weights).sum(axis=1) / h.astype(np.longdouble) ** k
		rounding = 4.0 * eps * float(np.abs(weights).sum()) * row_scale / h ** k
		dk, err = _richardson(d0, rounding)
		total += np.longdouble(coeffs[k]) * dk
		total_err += abs(float(coeffs[k])) * err

	g_mu = gamma(mu)
	factor = L ** (mu - m) / g_mu
	value = float(total) * factor
	estimate = total_err * abs(factor)
	logger.debug("D^%s %s at x=%s, m=%d: value=%.16e est=%.3e", sigma, f.label, x, m, value, estimate)
	if estimate > max(cfg.deriv_abs_tol, cfg.deriv_rel_tol * abs(value)):
		raise StepUnderflow(
			f"finite differences for D^{sigma} {f.label} at x={x} reached only {estimate:.3e}",
			estimate=estimate,
			value=value,
		)
	return value


def rl_apply(f: Integrand, sigma: float, x: float, a: float = 0.0, cfg: Optional[QuadratureConfig] = None) -> float:
	"""Dispatch on the sign of σ; D^0 f = f."""
	if sigma < 0:
		return rl_integral(f, sigma, x, a, cfg)
	if sigma == 0:
		_check_interval(x, a)
		return float(f.eval(np.asarray(x, dtype=float)))
	return rl_derivative(f, sigma, x, a, None, cfg)


def fractional(f: Integrand, sigma: float, x: float, a: float = 0.0, cfg: Optional[QuadratureConfig] = None) -> Integrand:
	"""
	u -> D^σ f(u) on (a, x] for σ < 0, as an Integrand built on one mesh
	frozen at x. Used to compose fractional integrals numerically.
	"""
	cfg = cfg or QuadratureConfig()
	if sigma >= 0:
		raise DomainError(f"fractional needs sigma < 0, got sigma={sigma}")
	_check_interval(x, a)
	mu = -float(sigma)
	mesh, _, _, _ = _build(f, mu, x, a, cfg)
	g = gamma(mu)
	exponent = (f.zero_exponent if f.singular_at_zero else 0.0) + mu
	return Integrand(
		lambda u: np.asarray(mesh.evaluate(u), dtype=float) / g,
		singular_at_zero=a == 0.0,
		zero_exponent=exponent,
		label=f"D^{sigma!r} {f.label}",
	)
