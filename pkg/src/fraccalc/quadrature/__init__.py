from .rl import (
	Integrand,
	QuadratureConfig,
	QuadratureResult,
	default_order,
	fractional,
	rl_apply,
	rl_derivative,
	rl_integral,
	rl_integral_result,
)
from .rules import FrozenMesh, adaptive_mesh, gauss_jacobi

__all__ = [
	"FrozenMesh",
	"Integrand",
	"QuadratureConfig",
	"QuadratureResult",
	"adaptive_mesh",
	"default_order",
	"fractional",
	"gauss_jacobi",
	"rl_apply",
	"rl_derivative",
	"rl_integral",
	"rl_integral_result",
]
