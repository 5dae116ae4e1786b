from .errors import (
	DivergentLimit,
	DomainError,
	FracCalcError,
	PoleError,
	StepUnderflow,
	TableIOError,
	ToleranceNotMet,
)

__all__ = [
	"DivergentLimit",
	"DomainError",
	"FracCalcError",
	"PoleError",
	"StepUnderflow",
	"TableIOError",
	"ToleranceNotMet",
]
