from .math_utils import (
	as_exact,
	compensated_sum,
	factorial_ratio,
	fmt_float,
	fmt_key,
	harmonic_fraction,
	is_integer,
	is_nonpositive_integer,
)

__all__ = [
	"as_exact",
	"compensated_sum",
	"factorial_ratio",
	"fmt_float",
	"fmt_key",
	"harmonic_fraction",
	"is_integer",
	"is_nonpositive_integer",
]
