from .forms import (
	Region,
	apply_order,
	classify_region,
	d_int_power,
	d_log,
	d_power,
	d_power_extended,
	d_power_log,
)
from .terms import ClosedFormExpr, LogPowerTerm, canonical_power, combine

__all__ = [
	"ClosedFormExpr",
	"LogPowerTerm",
	"Region",
	"apply_order",
	"canonical_power",
	"classify_region",
	"combine",
	"d_int_power",
	"d_log",
	"d_power",
	"d_power_extended",
	"d_power_log",
]
