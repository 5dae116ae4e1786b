from __future__ import annotations

from typing import Optional


class FracCalcError(Exception):
	"""Base class for every error raised by fraccalc."""


class PoleError(FracCalcError, ValueError):
	"""Argument sits on a pole of Γ, ψ or ψ^(m)."""


class DomainError(FracCalcError, ValueError):
	"""Argument outside the domain where the requested form is defined."""


class DivergentLimit(FracCalcError, ValueError):
	"""Numerator Γ has a pole that the denominator does not cancel."""


class ToleranceNotMet(FracCalcError, ArithmeticError):
	"""Adaptive quadrature ran out of subdivisions before reaching its tolerance."""

	def __init__(self, message: str, estimate: float, value: float):
		super().__init__(message)
		self.estimate = float(estimate)
		self.value = float(value)


class StepUnderflow(FracCalcError, ArithmeticError):
	"""Finite-difference derivative could not reach its tolerance at any step size."""

	def __init__(self, message: str, estimate: float, value: Optional[float] = None):
		super().__init__(message)
		self.estimate = float(estimate)
		self.value = value


class TableIOError(FracCalcError, OSError):
	"""Writing a table to its destination failed."""
