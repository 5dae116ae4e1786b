from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..closed.forms import (
	Region,
	apply_order,
	classify_region,
	d_int_power,
	d_log,
	d_power,
	d_power_extended,
)
from ..closed.terms import ClosedFormExpr
from ..errors import DivergentLimit, FracCalcError
from ..harmonic.zeta import (
	asymptotic_gap,
	asymptotic_gaps,
	generating_integral_log,
	harmonic_eps,
	harmonic_ext,
	harmonic_int,
	harmonic_via_integral,
	zeta_partial,
	zeta_partial_direct,
)
from ..quadrature.rl import (
	Integrand,
	QuadratureConfig,
	default_order,
	fractional,
	rl_apply,
	rl_derivative,
	rl_integral,
)
from ..special.functions import EULER_GAMMA, digamma, gamma, gamma_ratio_limit, polygamma
from ..tables.generating import gen_integral_coeff, golden_table1, render_table, table1
from ..utils.math_utils import fmt_float, harmonic_fraction

logger = logging.getLogger(__name__)

SUITE_ORDER = ("special", "closed", "closed-vs-quad", "lemma-m", "harmonic", "zeta", "table1")


@dataclass
class VerifyConfig:
	tol: float = 1e-6
	seed: int = 1337
	oracle_sigma: int = 20
	oracle_x: int = 20
	random_samples: int = 1000
	partition_samples: int = 10000
	gap_n_max: int = 10000

	def __post_init__(self):
		if self.tol <= 0:
			raise ValueError(f"verify.tol must be > 0, got {self.tol}")


@dataclass(frozen=True)
class PropertyResult:
	suite: str
	name: str
	passed: bool
	worst_error: float
	tolerance: float
	detail: str = ""

	def line(self) -> str:
		status = "PASS" if self.passed else "FAIL"
		text = f"{status} {self.suite}/{self.name} worst_error={fmt_float(self.worst_error)} tol={fmt_float(self.tolerance)}"
		if self.detail:
			text += f" ({self.detail})"
		return text

	def to_dict(self) -> dict:
		return asdict(self)


@dataclass
class _Tally:
	"""Worst observed error and whether every sample met its own bound."""
	tolerance: float
	worst: float = 0.0
	ok: bool = True
	where: str = ""

	def add(self, err: float, bound: Optional[float] = None, where: str = "") -> None:
		err = float(err)
		bound = self.tolerance if bound is None else float(bound)
		if not math.isfinite(err) or err > bound:
			if self.ok:
				self.where = where
			self.ok = False
		if not math.isfinite(err) or err > self.worst:
			self.worst = err

	def close(self, a: float, b: float, abs_tol: float, rel_tol: float, where: str = "") -> None:
		self.add(abs(a - b), max(abs_tol, rel_tol * abs(b)), where)


Check = Callable[["VerifyConfig", "QuadratureConfig"], _Tally]


def _exact_gap(e1: ClosedFormExpr, e2: ClosedFormExpr) -> float:
	"""0 when both expressions are term-for-term identical, else 1."""
	return 0.0 if (e1.terms == e2.terms and e1.is_exact() and e2.is_exact()) else 1.0


# --- special ---

def check_euler_constant(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(1e-15)
	t.add(abs(EULER_GAMMA - 0.5772156649015329))
	t.add(0.0 if repr(EULER_GAMMA).startswith("0.577215") else math.inf, where="leading digits")
	return t


def check_digamma_recurrence(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(1e-12)
	rng = np.random.default_rng(vcfg.seed)
	xs = [0.1, 0.5, 1.0, 2.5, 10.0] + list(rng.uniform(0.01, 50.0, vcfg.random_samples))
	for x in xs:
		t.add(abs(digamma(x + 1.0) - digamma(x) - 1.0 / x), where=f"x={x}")
	return t


def check_gamma_reflection(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(1e-12)
	rng = np.random.default_rng(vcfg.seed + 1)
	for x in rng.uniform(-5.0, 5.0, vcfg.random_samples):
		if abs(x - round(x)) < 1e-3:
			continue
		ref = math.pi / math.sin(math.pi * x)
		t.add(abs(gamma(x) * gamma(1.0 - x) - ref) / abs(ref), where=f"x={x}")
	return t


def _polygamma_series(m: int, x: float, n_terms: int = 2000) -> float:
	k = np.arange(n_terms, dtype=float)
	head = math.fsum((x + k) ** (-(m + 1)))
	y = x + n_terms
	# Euler-Maclaurin tail of Σ_{k>=N} (x+k)^{-(m+1)}
	tail = y ** (-m) / m + 0.5 * y ** (-(m + 1)) + (m + 1) / 12.0 * y ** (-(m + 2))
	sign = 1.0 if m % 2 else -1.0  # (-1)^(m+1)
	return sign * math.factorial(m) * (head + tail)


def check_polygamma_series(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(1e-10)
	for m in (1, 2, 3):
		for x in (0.5, 1.0, 2.0):
			t.add(abs(polygamma(m, x) - _polygamma_series(m, x)), where=f"m={m}, x={x}")
	return t


def _near_pole(z: float, width: float = 1e-6) -> bool:
	return round(z) <= 0 and abs(z - round(z)) < width


def check_gamma_ratio(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(1e-13)
	rng = np.random.default_rng(vcfg.seed + 2)
	for r, s in rng.uniform(-4.0, 4.0, (vcfg.random_samples, 2)):
		p, q = 1.0 + r, 1.0 + r - s
		if _near_pole(p) or _near_pole(q):
			continue
		ref = gamma(p) / gamma(q)
		t.add(abs(gamma_ratio_limit(r, s) - ref) / max(abs(ref), 1e-300), where=f"r={r}, sigma={s}")
	# pole cancellations and zeros read off the integer table
	for (r, s), want in {(-2, 1): -2.0, (-1, 2): 2.0, (2, 1): 2.0, (-3, -1): -0.5, (2, 3): 0.0}.items():
		t.add(abs(gamma_ratio_limit(r, s) - want), where=f"r={r}, sigma={s}")
	try:
		gamma_ratio_limit(-2, 0.5)
		t.add(math.inf, where="lone numerator pole did not raise")
	except DivergentLimit:
		pass
	return t


# --- closed ---

def _region_predicates(sigma: float, r: float) -> Tuple[bool, bool, bool, bool]:
	return (
		r < sigma and r >= 0,
		r >= sigma and r >= 0,
		r < sigma and r < 0,
		r >= sigma and r < 0,
	)


def check_region_partition(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(0.0)
	order = (Region.ZERO, Region.UPPER, Region.LOW, Region.LOG)
	rng = np.random.default_rng(vcfg.seed + 3)
	for s, r in rng.uniform(-5.0, 5.0, (vcfg.partition_samples, 2)):
		preds = _region_predicates(s, r)
		bad = sum(preds) != 1 or order[preds.index(True)] is not classify_region(s, r)
		t.add(1.0 if bad else 0.0, where=f"sigma={s}, r={r}")
	# on the integer lattice the region decides the shape of D^n x^m
	for n in range(-5, 6):
		for m in range(-5, 6):
			e = d_int_power(n, m, 0.0)
			has_log = any(term.log_power for term in e.terms)
			shape = Region.ZERO if e.is_zero() else Region.LOG if has_log else Region.UPPER if m >= 0 else Region.LOW
			t.add(0.0 if shape is classify_region(n, m) else 1.0, where=f"n={n}, m={m}")
	return t


def check_integer_consistency(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(0.0)
	for n in range(-3, 4):
		for m in range(-3, 3):
			e = d_power(n, m, 0.0) if m >= 0 else d_power_extended(n, m)
			t.add(_exact_gap(e, d_int_power(n, m, 0.0)), where=f"n={n}, m={m}")
	return t


def check_zero_region(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(0.0)
	for s in range(1, 8):
		for r in range(0, s):
			t.add(0.0 if d_power(s, r, 0.0).is_zero() else 1.0, where=f"sigma={s}, r={r}")
	return t


def check_derivative_of_integral(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(1e-15)
	for r in range(0, 6):
		t.add(_exact_gap(d_power(-1, r, 0.0).differentiate(), ClosedFormExpr.monomial(1, r)), where=f"x^{r}")
	t.add(_exact_gap(d_log(-1).differentiate(), ClosedFormExpr.monomial(1, 0, 1)), where="log")
	for r in (0.5, 1.5, 2.25):
		t.add(d_power(-1, r, 0.0).differentiate().coefficient_gap(ClosedFormExpr.monomial(1.0, r)), where=f"x^{r}")
	return t


def check_integer_log_limits(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(1e-5)
	for n in (1, 2):
		classical = ClosedFormExpr.monomial((-1) ** (n - 1) * math.factorial(n - 1), -n)
		t.add(_exact_gap(d_log(n), classical), 0.0, where=f"sigma={n}")
		folded = ClosedFormExpr.monomial(Fraction(1, math.factorial(n)), n, 1) - ClosedFormExpr.monomial(
			harmonic_fraction(n) / math.factorial(n), n)
		t.add(_exact_gap(d_log(-n), folded), 0.0, where=f"sigma={-n}")
	# the non-integer branch approaches the integer values continuously
	for n in (-2, -1, 1, 2):
		for d in (1e-7, -1e-7):
			t.close(d_log(n + d).evaluate(1.7), d_log(n).evaluate(1.7), 0.0, 1e-5, where=f"sigma={n}{d:+}")
	return t


def check_semigroup_closed(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(1e-12)
	corpus = [ClosedFormExpr.monomial(1, r) for r in (0, 0.5, 1, 2)] + [ClosedFormExpr.monomial(1, 0, 1)]
	orders = (0.25, 0.5, 1.0, 1.3)
	for f in corpus:
		for alpha in orders:
			for beta in orders:
				two = apply_order(apply_order(f, -beta), -alpha)
				one = apply_order(f, -(alpha + beta))
				t.add(two.coefficient_gap(one), where=f"alpha={alpha}, beta={beta}")
	return t


def check_extended_power(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(vcfg.tol)
	for r in (-1, -2):
		for s in (-2, -1, 1, 2):
			t.add(_exact_gap(d_power_extended(s, r), d_int_power(s, r, 0.0)), 0.0, where=f"sigma={s}, r={r}")
		for s in (-0.5, 0.5):
			t.add(d_power_extended(s, r).differentiate().coefficient_gap(d_power_extended(s + 1, r)), 1e-12,
				where=f"D^1 D^{s} x^{r}")
			lower = d_power_extended(s, r)
			upper = d_power_extended(s + 1, r)
			for x in (0.5, 1.0, 2.0):
				h = 1e-5 * x
				fd = (lower.evaluate(x + h) - lower.evaluate(x - h)) / (2.0 * h)
				t.close(fd, upper.evaluate(x), 1e-8, vcfg.tol, where=f"central difference sigma={s}, r={r}, x={x}")
	# D^-1/2 D^-1/2 x^-1 = D^-1 x^-1
	t.add(apply_order(d_power_extended(-0.5, -1), -0.5).coefficient_gap(d_power_extended(-1.0, -1)), 1e-12, where="semigroup r=-1")
	return t


def check_generating_closed(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(1e-12)
	for rho in (0.5, 1, 2):
		for r in (0.25, 0.5, 1, 2):
			t.add(gen_integral_coeff(rho, r, 0).coefficient_gap(d_power(-rho, r, 0.0)), 0.0, where=f"a=0 rho={rho}, r={r}")
			if rho >= 1:
				for a in (0, 1):
					t.add(gen_integral_coeff(rho, r, a).differentiate().coefficient_gap(gen_integral_coeff(rho - 1, r, a)),
						where=f"closure rho={rho}, r={r}, a={a}")
	for rho in (0.5, 1, 1.5, 3):
		t.add(gen_integral_coeff(rho, 0, 1).coefficient_gap(generating_integral_log(rho)), where=f"log rho={rho}")
	return t


# --- closed-vs-quad ---

def _corpus() -> List[Tuple[str, Integrand, Callable[[float], ClosedFormExpr]]]:
	out = []
	for r in (0, 0.5, 1, 2):
		out.append((f"t^{r}", Integrand.power(r), lambda s, r=r: d_power_extended(s, r)))
	out.append(("log", Integrand.log(), d_log))
	return out


def check_oracle_agreement(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(vcfg.tol)
	n = int(vcfg.oracle_sigma)
	sigmas = -3.0 + 6.0 * (np.arange(n) + 0.5) / n
	xs = np.linspace(0.2, 4.0, int(vcfg.oracle_x))
	for name, f, closed in _corpus():
		for s in sigmas:
			expr = closed(float(s))
			for x in xs:
				t.close(rl_apply(f, float(s), float(x), 0.0, qcfg), expr.evaluate(float(x)), 1e-8, vcfg.tol,
					where=f"{name} sigma={s:.3f} x={x:.3f}")
	return t


def check_linearity(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(1e-10)
	tight = QuadratureConfig(abs_tol=1e-13, rel_tol=1e-13, max_subdivisions=200, base_nodes=qcfg.base_nodes)
	rng = np.random.default_rng(vcfg.seed + 4)
	pairs = [
		(Integrand.power(1), Integrand.log()),
		(Integrand.power(0.5), Integrand.power(2)),
		(Integrand.power(0), Integrand.log()),
	]
	for f, g in pairs:
		for s in (-0.5, -1.5, -2.3):
			alpha, beta = rng.uniform(-2.0, 2.0, 2)
			x = 1.7
			lhs = rl_integral(f.combine(alpha, g, beta), s, x, 0.0, tight)
			rhs = alpha * rl_integral(f, s, x, 0.0, tight) + beta * rl_integral(g, s, x, 0.0, tight)
			t.close(lhs, rhs, 1e-10, 1e-10, where=f"{f.label}, {g.label}, sigma={s}")
	return t


def check_semigroup_numeric(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(vcfg.tol)
	corpus = [Integrand.power(0), Integrand.power(0.5), Integrand.power(1), Integrand.log()]
	for f in corpus:
		for s1, s2 in ((-0.5, -0.7), (-1.3, -0.25), (-0.4, -1.6)):
			for x in (0.5, 2.0):
				inner = fractional(f, s2, x, 0.0, qcfg)
				composed = rl_integral(inner, s1, x, 0.0, qcfg)
				direct = rl_integral(f, s1 + s2, x, 0.0, qcfg)
				t.close(composed, direct, 1e-8, vcfg.tol, where=f"{f.label} ({s1}, {s2}) x={x}")
	return t


def check_log_eps_limit(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(vcfg.tol)
	for s in (-0.5, -1.5):
		for x in (0.5, 2.0):
			target = rl_integral(Integrand.log(), s, x, 0.0, qcfg)
			vals = [rl_integral(Integrand.log_eps(e), s, x, 0.0, qcfg) for e in (1e-3, 1e-4, 1e-5)]
			# linear in ε: one Richardson step per decade
			for coarse, fine in zip(vals, vals[1:]):
				t.close((10.0 * fine - coarse) / 9.0, target, 1e-8, vcfg.tol, where=f"sigma={s} x={x}")
	return t


def check_generating_log_quadrature(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(1e-8)
	for rho in (0.5, 1.0, 2.0):
		for r in (0.25, 0.5, 1.0, 2.0):
			expr = gen_integral_coeff(rho, r, 1)
			for x in (0.5, 2.0):
				quad = rl_integral(Integrand.power_log(r), -rho, x, 0.0, qcfg)
				t.close(quad, expr.evaluate(x), 1e-8, 1e-8, where=f"rho={rho}, r={r}, x={x}")
	return t


# --- lemma-m ---

def check_m_independence(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(vcfg.tol)
	for s in (0.3, 0.5, 1.2, 2.7):
		m0 = default_order(s)
		for f in (Integrand.power(1), Integrand.power(2), Integrand.log()):
			for x in (0.5, 1.0, 2.0):
				vals = [rl_derivative(f, s, x, 0.0, m, qcfg) for m in range(m0, m0 + 3)]
				t.add(max(vals) - min(vals), where=f"{f.label} sigma={s} x={x}")
	return t


# --- harmonic ---

def check_integer_agreement(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(1e-11)
	for n in range(0, 51):
		t.add(abs(harmonic_ext(n) - harmonic_int(n)), where=f"n={n}")
	return t


def check_harmonic_recurrence(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(1e-11)
	rng = np.random.default_rng(vcfg.seed + 5)
	for rho in rng.uniform(0.0, 20.0, 200):
		if rho < 1e-3:
			continue
		t.add(abs(harmonic_ext(rho) - harmonic_ext(rho - 1.0) - 1.0 / rho), where=f"rho={rho}")
	return t


def check_x_independence(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(vcfg.tol)
	for rho in (0.5, 1.5, 2.5):
		vals = [harmonic_via_integral(rho, x, qcfg) for x in (0.5, 1.0, 2.0, math.e)]
		t.add(max(vals) - min(vals), where=f"rho={rho}")
		t.add(abs(vals[0] - harmonic_ext(rho)), where=f"rho={rho} vs digamma")
	return t


def check_induction_ladder(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(1e-8)
	for n in range(1, 9):
		for x in (0.5, 1.0, 2.0):
			closed = x ** n / math.factorial(n) * (math.log(x) - harmonic_int(n))
			t.add(abs(rl_apply(Integrand.log(), -n, x, 0.0, qcfg) - closed), where=f"n={n}, x={x}")
	return t


def check_generating_integral(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(vcfg.tol)
	for rho in (0.5, 1.5, 2.5):
		expr = generating_integral_log(rho)
		for x in (0.5, 1.0, 2.0, math.e):
			t.close(rl_integral(Integrand.log(), -rho, x, 0.0, qcfg), expr.evaluate(x), vcfg.tol, vcfg.tol,
				where=f"rho={rho}, x={x}")
	t.add(abs(harmonic_ext(0.5) - (2.0 - 2.0 * math.log(2.0))), where="h(1/2) via digamma")
	t.add(abs(harmonic_via_integral(0.5, 2.0, qcfg) - (2.0 - 2.0 * math.log(2.0))), where="h(1/2) via quadrature")
	return t


def check_eps_limit(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(vcfg.tol)
	for rho in (0.5, 1.5, 2.5):
		for x in (0.5, 2.0):
			extrapolated = (10.0 * harmonic_eps(rho, x, 1e-4) - harmonic_eps(rho, x, 1e-3)) / 9.0
			t.add(abs(extrapolated - harmonic_ext(rho)), where=f"rho={rho}, x={x}")
	return t


def check_asymptotic_gap(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(0.0)
	n_max = int(vcfg.gap_n_max)
	gaps = asymptotic_gaps(n_max)
	n = np.arange(1, n_max + 1, dtype=float)
	bad = np.count_nonzero((gaps <= 0.0) | (gaps >= 1.0 / n))
	t.add(float(bad), where="running sum")
	for k in (1, 10, 1000, n_max):
		g = asymptotic_gap(k)
		t.add(0.0 if 0.0 < g < 1.0 / k else 1.0, where=f"n={k}")
	return t


def check_curve_passes_integers(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(1e-11)
	for n in range(1, 31):
		t.add(abs(harmonic_ext(float(n)) - float(harmonic_fraction(n))), where=f"n={n}")
	return t


# --- zeta ---

def check_zeta_equivalence(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(1e-12)
	for m in (1, 2, 3, 4):
		for n in range(0, 101):
			t.add(abs(zeta_partial(m, n) - zeta_partial_direct(m, n)), where=f"m={m}, n={n}")
	return t


def check_zeta_tail(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(1.01e-4)
	n = 10_000
	t.add(abs(zeta_partial_direct(2, n) - math.pi ** 2 / 6.0), where="direct")
	t.add(abs(zeta_partial(2, n) - math.pi ** 2 / 6.0), where="polygamma")
	return t


# --- table1 ---

def check_table1_golden(vcfg: VerifyConfig, qcfg: QuadratureConfig) -> _Tally:
	t = _Tally(0.0)
	rendered = render_table(table1(), "text")
	golden = golden_table1()
	if rendered != golden:
		mismatched = sum(a != b for a, b in zip(rendered.splitlines(), golden.splitlines()))
		t.add(float(max(mismatched, 1)), where="rendered table differs from golden file")
	return t


SUITES: Dict[str, List[Tuple[str, Check]]] = {
	"special": [
		("euler_constant", check_euler_constant),
		("digamma_recurrence", check_digamma_recurrence),
		("gamma_reflection", check_gamma_reflection),
		("polygamma_series", check_polygamma_series),
		("gamma_ratio_limit", check_gamma_ratio),
	],
	"closed": [
		("region_partition", check_region_partition),
		("integer_consistency", check_integer_consistency),
		("zero_region", check_zero_region),
		("derivative_of_integral", check_derivative_of_integral),
		("integer_log_limits", check_integer_log_limits),
		("semigroup_closed", check_semigroup_closed),
		("extended_power", check_extended_power),
		("generating_closed", check_generating_closed),
	],
	"closed-vs-quad": [
		("oracle_agreement", check_oracle_agreement),
		("linearity", check_linearity),
		("semigroup_numeric", check_semigroup_numeric),
		("log_eps_limit", check_log_eps_limit),
		("generating_log_quadrature", check_generating_log_quadrature),
	],
	"lemma-m": [
		("m_independence", check_m_independence),
	],
	"harmonic": [
		("integer_agreement", check_integer_agreement),
		("recurrence", check_harmonic_recurrence),
		("x_independence", check_x_independence),
		("induction_ladder", check_induction_ladder),
		("generating_integral", check_generating_integral),
		("eps_limit", check_eps_limit),
		("asymptotic_gap", check_asymptotic_gap),
		("curve_through_integers", check_curve_passes_integers),
	],
	"zeta": [
		("polygamma_equivalence", check_zeta_equivalence),
		("tail_bound", check_zeta_tail),
	],
	"table1": [
		("golden", check_table1_golden),
	],
}


def suite_names(suite: str) -> Sequence[str]:
	if suite == "all":
		return SUITE_ORDER
	if suite not in SUITES:
		raise ValueError(f"unknown suite {suite!r}; expected one of all, {', '.join(SUITE_ORDER)}")
	return (suite,)


def run_suite(suite: str, vcfg: Optional[VerifyConfig] = None, qcfg: Optional[QuadratureConfig] = None) -> List[PropertyResult]:
	"""Run every property of `suite` ("all" for every suite) in a fixed order."""
	vcfg = vcfg or VerifyConfig()
	qcfg = qcfg or QuadratureConfig()
	results: List[PropertyResult] = []
	for name in suite_names(suite):
		logger.info("suite %s: %d properties", name, len(SUITES[name]))
		for prop, check in SUITES[name]:
			try:
				tally = check(vcfg, qcfg)
				results.append(PropertyResult(name, prop, tally.ok, tally.worst, tally.tolerance, "" if tally.ok else tally.where))
			except FracCalcError as exc:
				logger.warning("%s/%s raised %s", name, prop, exc)
				results.append(PropertyResult(name, prop, False, math.inf, math.nan, f"{type(exc).__name__}: {exc}"))
	return results
