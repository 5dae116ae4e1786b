from .functions import (
	EULER_GAMMA,
	digamma,
	gamma,
	gamma_ratio_limit,
	ln_gamma,
	polygamma,
	sign_gamma,
)

__all__ = [
	"EULER_GAMMA",
	"digamma",
	"gamma",
	"gamma_ratio_limit",
	"ln_gamma",
	"polygamma",
	"sign_gamma",
]
