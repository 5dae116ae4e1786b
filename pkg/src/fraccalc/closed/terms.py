from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Tuple, Union

import numpy as np

from ..utils.math_utils import as_exact, fmt_float, fmt_key

Coeff = Union[int, float, Fraction]

POWER_DIGITS = 12


def canonical_power(p: Coeff) -> Coeff:
	"""Exponent as used for like-term matching: exact values stay, floats keep POWER_DIGITS significant digits."""
	p = as_exact(p)
	if isinstance(p, (int, Fraction)):
		return p
	return as_exact(float(f"{float(p):.{POWER_DIGITS}g}"))


@dataclass(frozen=True)
class LogPowerTerm:
	"""coeff · x^power · (log x)^log_power."""
	coeff: Coeff
	power: Coeff
	log_power: int = 0

	def __post_init__(self):
		if self.log_power not in (0, 1):
			raise ValueError(f"log_power must be 0 or 1, got {self.log_power}")
		object.__setattr__(self, "power", canonical_power(self.power))

	def key(self) -> Tuple[Coeff, int]:
		return (self.power, self.log_power)

	def evaluate(self, x):
		x = np.asarray(x, dtype=float)
		v = float(self.coeff) * np.power(x, float(self.power))
		if self.log_power:
			v = v * np.log(x)
		return v


def _is_exact(c: Coeff) -> bool:
	return isinstance(c, (int, Fraction))


def _normalize(terms: Iterable[LogPowerTerm]) -> Tuple[LogPowerTerm, ...]:
	"""Merge like terms, drop exact zeros, order by (power, log_power) descending."""
	merged: Dict[Tuple[Coeff, int], Coeff] = {}
	powers: Dict[Tuple[Coeff, int], Coeff] = {}
	for t in terms:
		k = t.key()
		if k in merged:
			merged[k] = merged[k] + t.coeff
		else:
			merged[k] = t.coeff
			powers[k] = t.power
	out: List[LogPowerTerm] = []
	for k, c in merged.items():
		if c == 0:
			continue
		out.append(LogPowerTerm(coeff=c, power=as_exact(powers[k]), log_power=k[1]))
	out.sort(key=lambda t: (float(t.power), t.log_power), reverse=True)
	return tuple(out)


@dataclass(frozen=True)
class ClosedFormExpr:
	"""
	Finite sum of LogPowerTerms minus the same kind of sum taken at the lower
	limit. Exact (int/Fraction) coefficients stay exact through every operation
	that does not mix in a float.
	"""
	terms: Tuple[LogPowerTerm, ...] = ()
	lower_limit_terms: Tuple[LogPowerTerm, ...] = ()
	lower_limit: float = 0.0

	def __post_init__(self):
		object.__setattr__(self, "terms", _normalize(self.terms))
		object.__setattr__(self, "lower_limit_terms", _normalize(self.lower_limit_terms))

	@classmethod
	def zero(cls) -> "ClosedFormExpr":
		return cls()

	@classmethod
	def monomial(cls, coeff: Coeff, power: Coeff, log_power: int = 0) -> "ClosedFormExpr":
		return cls(terms=(LogPowerTerm(coeff, as_exact(power), log_power),))

	def is_zero(self) -> bool:
		return not self.terms and not self.lower_limit_terms

	def is_exact(self) -> bool:
		return all(_is_exact(t.coeff) and _is_exact(t.power) for t in self.terms + self.lower_limit_terms)

	def coefficient(self, power: Coeff, log_power: int = 0) -> Coeff:
		key = (canonical_power(power), log_power)
		for t in self.terms:
			if t.key() == key:
				return t.coeff
		return 0

	def evaluate(self, x):
		"""Value at x (scalar or array); lower-limit terms are evaluated at `lower_limit`."""
		x = np.asarray(x, dtype=float)
		v = np.zeros_like(x)
		for t in self.terms:
			v = v + t.evaluate(x)
		for t in self.lower_limit_terms:
			v = v - t.evaluate(self.lower_limit)
		if v.ndim == 0:
			return float(v)
		return v

	def scaled(self, c: Coeff) -> "ClosedFormExpr":
		return ClosedFormExpr(
			terms=tuple(LogPowerTerm(c * t.coeff, t.power, t.log_power) for t in self.terms),
			lower_limit_terms=tuple(LogPowerTerm(c * t.coeff, t.power, t.log_power) for t in self.lower_limit_terms),
			lower_limit=self.lower_limit,
		)

	def __add__(self, other: "ClosedFormExpr") -> "ClosedFormExpr":
		if self.lower_limit_terms and other.lower_limit_terms and self.lower_limit != other.lower_limit:
			raise ValueError("cannot add expressions with different lower limits")
		lower = self.lower_limit if self.lower_limit_terms else other.lower_limit
		return ClosedFormExpr(
			terms=self.terms + other.terms,
			lower_limit_terms=self.lower_limit_terms + other.lower_limit_terms,
			lower_limit=lower,
		)

	def __neg__(self) -> "ClosedFormExpr":
		return self.scaled(-1)

	def __sub__(self, other: "ClosedFormExpr") -> "ClosedFormExpr":
		return self + (-other)

	def differentiate(self) -> "ClosedFormExpr":
		"""D¹ term by term; lower-limit terms are constants and vanish."""
		out: List[LogPowerTerm] = []
		for t in self.terms:
			if t.log_power == 0:
				if t.power != 0:
					out.append(LogPowerTerm(t.coeff * t.power, as_exact(t.power - 1), 0))
			else:
				if t.power != 0:
					out.append(LogPowerTerm(t.coeff * t.power, as_exact(t.power - 1), 1))
				out.append(LogPowerTerm(t.coeff, as_exact(t.power - 1), 0))
		return ClosedFormExpr(terms=tuple(out))

	def coefficient_gap(self, other: "ClosedFormExpr") -> float:
		"""
		Largest coefficient difference over the union of keys, relative to the
		larger of the two coefficients or to the largest coefficient overall.
		A term missing on one side counts as 0; equal exact coefficients give 0.
		"""
		mine = {t.key(): t.coeff for t in self.terms}
		theirs = {t.key(): t.coeff for t in other.terms}
		ref = max([abs(float(c)) for c in list(mine.values()) + list(theirs.values())], default=0.0)
		worst = 0.0
		for k in mine.keys() | theirs.keys():
			a, b = mine.get(k, 0), theirs.get(k, 0)
			if _is_exact(a) and _is_exact(b) and a == b:
				continue
			scale = max(abs(float(a)), abs(float(b)), ref, 1e-300)
			worst = max(worst, abs(float(a) - float(b)) / scale)
		return worst

	def render(self) -> str:
		"""Decimal rendering, deterministic: `c x^p log x + ...`."""
		if not self.terms:
			return "0"
		parts: List[str] = []
		for i, t in enumerate(self.terms):
			c = float(t.coeff)
			body = fmt_float(abs(c))
			if t.power != 0:
				body += " x" if t.power == 1 else f" x^{fmt_key(t.power)}"
			if t.log_power:
				body += " log x"
			if i == 0:
				parts.append(("-" if c < 0 else "") + body)
			else:
				parts.append((" - " if c < 0 else " + ") + body)
		return "".join(parts)


def combine(*pairs: Tuple[Coeff, ClosedFormExpr]) -> ClosedFormExpr:
	"""Σ c_i · e_i."""
	out = ClosedFormExpr.zero()
	for c, e in pairs:
		out = out + (e if c == 1 else e.scaled(c))
	return out
