import math

import pytest

from fraccalc.eval import SUITE_ORDER, SUITES, VerifyConfig, run_suite


@pytest.mark.parametrize("suite", SUITE_ORDER)
def test_every_suite_passes(suite):
	vcfg = VerifyConfig()
	results = run_suite(suite, vcfg)
	assert len(results) == len(SUITES[suite])
	failed = [r.line() for r in results if not r.passed]
	assert not failed, failed


def test_suite_order_covers_every_suite():
	assert set(SUITE_ORDER) == set(SUITES)
	assert SUITE_ORDER[0] == "special" and SUITE_ORDER[-1] == "table1"


def test_unknown_suite():
	with pytest.raises(ValueError):
		run_suite("nope")


def test_result_line_format():
	res = run_suite("table1")[0]
	assert res.line() == "PASS table1/golden worst_error=0.0000000000000000e+00 tol=0.0000000000000000e+00"
	assert res.to_dict()["passed"] is True
	assert math.isfinite(res.worst_error)


def test_verify_config_rejects_bad_tolerance():
	with pytest.raises(ValueError):
		VerifyConfig(tol=0.0)


def test_oracle_grid_defaults_to_twenty_by_twenty():
	vcfg = VerifyConfig()
	assert (vcfg.oracle_sigma, vcfg.oracle_x) == (20, 20)
