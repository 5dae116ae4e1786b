from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, List, Union

import numpy as np

Number = Union[int, float, Fraction]


def is_integer(x: Number) -> bool:
	"""True when x is integer-valued (exactly; no tolerance)."""
	if isinstance(x, (int, np.integer)):
		return True
	if isinstance(x, Fraction):
		return x.denominator == 1
	return float(x).is_integer()


def is_nonpositive_integer(x: Number) -> bool:
	return is_integer(x) and x <= 0


def as_exact(x: Number) -> Number:
	"""Integer-valued numbers become int, everything else is left alone."""
	if isinstance(x, bool):
		return int(x)
	if is_integer(x):
		return int(x)
	return x


def factorial_ratio(a: int, b: int) -> Fraction:
	"""a!/b! as an exact fraction (a, b >= 0)."""
	if a < 0 or b < 0:
		raise ValueError(f"factorial_ratio needs non-negative arguments, got a={a}, b={b}")
	if a >= b:
		return Fraction(math.perm(a, a - b))
	return Fraction(1, math.perm(b, b - a))


_HARMONIC: List[Fraction] = [Fraction(0)]


def harmonic_fraction(n: int) -> Fraction:
	"""h(n) = 1 + 1/2 + ... + 1/n, exactly; h(0) = 0."""
	if n < 0:
		raise ValueError(f"harmonic_fraction needs n >= 0, got {n}")
	while len(_HARMONIC) <= n:
		k = len(_HARMONIC)
		_HARMONIC.append(_HARMONIC[-1] + Fraction(1, k))
	return _HARMONIC[n]


def compensated_sum(values: Iterable[float]) -> float:
	"""Sum with error compensation (Shewchuk, via math.fsum)."""
	return math.fsum(values)


def fmt_float(v: float) -> str:
	"""17 significant digits, scientific, locale independent."""
	return f"{float(v):.16e}"


def fmt_key(v: Number) -> str:
	"""Shortest round-trip rendering of a table key or exponent."""
	v = as_exact(v)
	if isinstance(v, int):
		return str(v)
	if isinstance(v, Fraction):
		return f"{v.numerator}/{v.denominator}"
	return repr(float(v))
