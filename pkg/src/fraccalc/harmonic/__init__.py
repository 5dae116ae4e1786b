from .zeta import (
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

__all__ = [
	"asymptotic_gap",
	"asymptotic_gaps",
	"generating_integral_log",
	"harmonic_eps",
	"harmonic_ext",
	"harmonic_int",
	"harmonic_via_integral",
	"zeta_partial",
	"zeta_partial_direct",
]
