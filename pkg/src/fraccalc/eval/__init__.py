from .verify import SUITE_ORDER, SUITES, PropertyResult, VerifyConfig, run_suite

__all__ = [
	"PropertyResult",
	"SUITES",
	"SUITE_ORDER",
	"VerifyConfig",
	"run_suite",
]
