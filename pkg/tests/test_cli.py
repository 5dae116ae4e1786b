import json

import pytest

from fraccalc.cli.run import curve_rows, main
from fraccalc.tables import golden_table1


def _values(out):
	return {k: v.strip() for k, v in (line.split(":", 1) for line in out.strip().splitlines())}


def test_table1_text_is_golden(capsys):
	assert main(["table1", "--format", "text"]) == 0
	assert capsys.readouterr().out == golden_table1()


def test_table1_bad_range_is_usage_error():
	with pytest.raises(SystemExit) as info:
		main(["table1", "--m-range", "1-2"])
	assert info.value.code == 2
	with pytest.raises(SystemExit) as info:
		main(["table1", "--m-range=-12..0"])
	assert info.value.code == 2


def test_eval_closed_exact(capsys):
	assert main(["eval", "--f", "power", "--r", "1", "--order", "-1", "--x", "2"]) == 0
	assert capsys.readouterr().out == "closed: 2.0000000000000000e+00\n"


def test_eval_both_agree(capsys):
	assert main(["eval", "--f", "power", "--r", "0.5", "--order", "-0.5", "--x", "1.5", "--method", "both"]) == 0
	vals = _values(capsys.readouterr().out)
	assert float(vals["discrepancy"]) < 1e-6
	assert float(vals["closed"]) == pytest.approx(float(vals["quad"]), rel=1e-9)


def test_eval_log_with_lower_limit_fails(capsys):
	assert main(["eval", "--f", "log", "--order", "-0.5", "--x", "2", "--a", "0.5"]) == 1
	assert capsys.readouterr().err.startswith("error:")


def test_eval_usage_errors():
	for argv in (
		["eval", "--f", "power", "--order", "0.5", "--x", "1"],
		["eval", "--f", "log", "--order", "0.5", "--x", "-1"],
		["eval", "--f", "log", "--order", "0.5", "--x", "1", "--a", "2"],
	):
		with pytest.raises(SystemExit) as info:
			main(argv)
		assert info.value.code == 2


def test_harmonic(capsys):
	assert main(["harmonic", "--rho", "3"]) == 0
	vals = _values(capsys.readouterr().out)
	assert vals["h_n_fraction"] == "11/6"
	assert vals["h_n_exact"] == "1.8333333333333333e+00"
	assert main(["harmonic", "--rho", "-1"]) == 1


def test_zeta(capsys):
	assert main(["zeta", "--m", "2", "--n", "3"]) == 0
	vals = _values(capsys.readouterr().out)
	assert float(vals["zeta_direct"]) == pytest.approx(49.0 / 36.0, rel=1e-15)
	with pytest.raises(SystemExit):
		main(["zeta", "--m", "0", "--n", "3"])


def test_curve_single_point(capsys):
	assert main(["curve", "--rho-min", "-0.5", "--rho-max", "-0.5", "--step", "1"]) == 0
	lines = capsys.readouterr().out.splitlines()
	assert lines[0] == "rho,h_rho,h_n_exact"
	rho, h, exact = lines[1].split(",")
	assert float(rho) == -0.5
	assert float(h) == pytest.approx(-1.3862943611198906, rel=1e-14)
	assert exact == ""


def test_curve_skips_poles():
	rows = curve_rows(-1.5, 0.0, 0.5)
	assert rows[1][0].startswith("# skipped rho=-1.0")
	assert rows[-1][2] == "0.0000000000000000e+00"
	assert len(rows) == 4


def test_regions_csv(capsys):
	assert main(["regions", "--sigma-list=-2,-1", "--r-list=-2", "--format", "csv"]) == 0
	assert capsys.readouterr().out == "r\\sigma,-2,-1\n-2,Log,Low\n"


def test_gentable_writes_file(tmp_path):
	out = tmp_path / "gen.csv"
	assert main(["gentable", "--rho-list", "1", "--r-list", "0", "--out", str(out)]) == 0
	assert out.read_text(encoding="utf-8") == "r\\rho (a=0),1\n0,1.0000000000000000e+00 x\n"


def test_verify_writes_summary(tmp_path, capsys):
	assert main(["verify", "--suite", "table1", "--out", str(tmp_path)]) == 0
	assert "PASS table1/golden" in capsys.readouterr().out
	summary = json.loads((tmp_path / "summary.json").read_text(encoding="utf-8"))
	assert summary["passed"] == summary["total"] == 1


def test_bad_tolerance_env(monkeypatch):
	monkeypatch.setenv("FRACCALC_TOL", "tight")
	with pytest.raises(SystemExit) as info:
		main(["zeta", "--m", "2", "--n", "3"])
	assert info.value.code == 2


def test_config_file(tmp_path, capsys):
	good = tmp_path / "good.yaml"
	good.write_text("quadrature:\n  max_subdivisions: 80\nverify:\n  tol: 1.0e-7\n", encoding="utf-8")
	assert main(["zeta", "--m", "2", "--n", "3", "--config", str(good)]) == 0
	bad = tmp_path / "bad.yaml"
	bad.write_text("verify:\n  bogus: 1\n", encoding="utf-8")
	with pytest.raises(SystemExit) as info:
		main(["zeta", "--m", "2", "--n", "3", "--config", str(bad)])
	assert info.value.code == 2


def test_eval_log_integral_both_routes(capsys):
	assert main(["eval", "--f", "log", "--order", "-1", "--x", "2", "--method", "both"]) == 0
	vals = _values(capsys.readouterr().out)
	assert float(vals["closed"]) == pytest.approx(-0.6137056388801094, rel=1e-13)
	assert float(vals["discrepancy"]) < 1e-10


def test_eval_order_zero_is_identity(capsys):
	assert main(["eval", "--f", "power", "--r", "1", "--order", "0", "--x", "7", "--method", "both"]) == 0
	vals = _values(capsys.readouterr().out)
	assert float(vals["closed"]) == 7.0 and float(vals["quad"]) == 7.0


def test_curve_integer_points():
	rows = curve_rows(0.0, 3.0, 1.0)
	assert [float(row[2]) for row in rows] == [0.0, 1.0, 1.5, 11.0 / 6.0]


def test_eval_both_refuses_lower_limit_beyond_one_fold():
	for argv in (
		["eval", "--f", "power", "--r", "0", "--order=-0.5", "--x", "2", "--a", "1", "--method", "both"],
		["eval", "--f", "power", "--r", "1", "--order", "0.5", "--x", "2", "--a", "1", "--method", "both"],
	):
		with pytest.raises(SystemExit) as info:
			main(argv)
		assert info.value.code == 2


def test_eval_both_with_lower_limit_one_fold(capsys):
	assert main(["eval", "--f", "power", "--r", "1", "--order=-1", "--x", "3", "--a", "1", "--method", "both"]) == 0
	vals = _values(capsys.readouterr().out)
	assert float(vals["closed"]) == pytest.approx(4.0, rel=1e-12)
	assert float(vals["discrepancy"]) < 1e-10


def test_verify_all_exits_zero(capsys):
	assert main(["verify"]) == 0
	assert capsys.readouterr().out.splitlines()[-1].endswith("properties passed")
