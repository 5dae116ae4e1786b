from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import math
import os
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import yaml

from ..closed.forms import d_log, d_power, d_power_extended
from ..errors import DomainError, FracCalcError, TableIOError
from ..eval.verify import SUITE_ORDER, VerifyConfig, run_suite
from ..harmonic.zeta import (
	harmonic_ext,
	harmonic_int,
	harmonic_via_integral,
	zeta_partial,
	zeta_partial_direct,
)
from ..quadrature.rl import Integrand, QuadratureConfig, rl_apply
from ..tables.generating import TABLE1_LIMIT, emit_table, gen_table, region_table, table1
from ..utils.math_utils import fmt_float, harmonic_fraction

logger = logging.getLogger(__name__)

EVAL_AGREEMENT = 1e-6
ZETA_AGREEMENT = 1e-12
POLE_GAP = 1e-6
TOL_ENV = "FRACCALC_TOL"


# --- argument types ---

def int_range(text: str) -> Tuple[int, int]:
	"""`A..B` -> (A, B)."""
	try:
		lo, hi = text.split("..")
		return int(lo), int(hi)
	except ValueError:
		raise argparse.ArgumentTypeError(f"expected an integer range A..B, got {text!r}")


def float_list(text: str) -> List[float]:
	try:
		return [float(v) for v in text.split(",") if v.strip()]
	except ValueError:
		raise argparse.ArgumentTypeError(f"expected a comma separated list of numbers, got {text!r}")


def parse_args(argv: Optional[Sequence[str]] = None) -> Tuple[argparse.ArgumentParser, argparse.Namespace]:
	common = argparse.ArgumentParser(add_help=False)
	common.add_argument("--config", default=None, help="Path to YAML config (quadrature/verify sections)")
	common.add_argument("--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"])

	parser = argparse.ArgumentParser(prog="fraccalc", description="Fractional integrals and derivatives of powers and log x")
	sub = parser.add_subparsers(dest="command", required=True)

	p = sub.add_parser("eval", parents=[common], help="D^order f at x")
	p.add_argument("--f", required=True, choices=["power", "log"])
	p.add_argument("--r", type=float, default=None, help="Exponent for --f power")
	p.add_argument("--order", type=float, required=True)
	p.add_argument("--x", type=float, required=True)
	p.add_argument("--a", type=float, default=0.0, help="Lower limit")
	p.add_argument("--method", choices=["closed", "quad", "both"], default="closed")

	p = sub.add_parser("harmonic", parents=[common], help="h(rho) = psi(1+rho) + gamma")
	p.add_argument("--rho", type=float, required=True)
	p.add_argument("--x", type=float, default=None, help="Also evaluate the generating integral at x")

	p = sub.add_parser("zeta", parents=[common], help="Partial zeta sum of order m up to n")
	p.add_argument("--m", type=int, required=True)
	p.add_argument("--n", type=int, required=True)

	p = sub.add_parser("table1", parents=[common], help="Integer-order table D^n x^m")
	p.add_argument("--m-range", type=int_range, default=(-3, 2), help="A..B; write --m-range=-3..2 for negative A")
	p.add_argument("--n-range", type=int_range, default=(-3, 3))
	p.add_argument("--format", choices=["csv", "text"], default="text")
	p.add_argument("--out", default=None)

	p = sub.add_parser("gentable", parents=[common], help="Generating integrals of x^r (log x)^a")
	p.add_argument("--rho-list", type=float_list, required=True, help="Comma separated; use --rho-list=-0.5,1 when it starts with a minus")
	p.add_argument("--r-list", type=float_list, required=True)
	p.add_argument("--a", type=int, choices=[0, 1], default=0)
	p.add_argument("--format", choices=["csv", "text"], default="csv")
	p.add_argument("--out", default=None)

	p = sub.add_parser("regions", parents=[common], help="Region tags over a (sigma, r) grid")
	p.add_argument("--sigma-list", type=float_list, required=True)
	p.add_argument("--r-list", type=float_list, required=True)
	p.add_argument("--format", choices=["csv", "text"], default="text")
	p.add_argument("--out", default=None)

	p = sub.add_parser("curve", parents=[common], help="h(rho) sampled on [rho-min, rho-max]")
	p.add_argument("--rho-min", type=float, required=True)
	p.add_argument("--rho-max", type=float, required=True)
	p.add_argument("--step", type=float, required=True)
	p.add_argument("--out", default=None)

	p = sub.add_parser("verify", parents=[common], help="Run property suites")
	p.add_argument("--suite", choices=("all",) + SUITE_ORDER, default="all")
	p.add_argument("--out", default=None, help="Directory for summary.json")

	args = parser.parse_args(argv)
	return parser, args


def validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
	"""Flag checks argparse cannot express; all run before any computation."""
	cmd = args.command
	if cmd == "eval":
		if args.f == "power" and args.r is None:
			parser.error("--f power needs --r")
		if args.x <= 0:
			parser.error(f"--x must be > 0, got {args.x}")
		if not (0.0 <= args.a < args.x):
			parser.error(f"need 0 <= --a < --x, got a={args.a}, x={args.x}")
		# from a > 0 the closed forms omit the a-dependent terms except for one-fold integrals
		if args.method == "both" and args.a > 0 and not (args.f == "power" and args.order in (-1.0, 0.0)):
			parser.error(f"--method both with --a > 0 needs --f power and --order -1 or 0, got --order {args.order}; use --method quad")
	elif cmd == "harmonic":
		if args.x is not None and args.x <= 0:
			parser.error(f"--x must be > 0, got {args.x}")
	elif cmd == "zeta":
		if args.m < 1 or args.n < 0:
			parser.error(f"need --m >= 1 and --n >= 0, got m={args.m}, n={args.n}")
	elif cmd == "table1":
		for name, (lo, hi) in (("--m-range", args.m_range), ("--n-range", args.n_range)):
			if lo < -TABLE1_LIMIT or hi > TABLE1_LIMIT:
				parser.error(f"{name} must lie within [-{TABLE1_LIMIT}, {TABLE1_LIMIT}], got {lo}..{hi}")
	elif cmd == "gentable":
		if any(r <= -1 for r in args.r_list):
			parser.error("--r-list entries must be > -1")
	elif cmd == "curve":
		if args.step <= 0:
			parser.error(f"--step must be > 0, got {args.step}")
		if args.rho_min > args.rho_max:
			parser.error(f"--rho-min must not exceed --rho-max, got {args.rho_min} > {args.rho_max}")


def load_config(path: str) -> dict:
	with open(path, "r", encoding="utf-8") as f:
		return yaml.safe_load(f) or {}


def build_configs(parser: argparse.ArgumentParser, args: argparse.Namespace) -> Tuple[QuadratureConfig, VerifyConfig]:
	try:
		cfg = load_config(args.config) if args.config else {}
	except (OSError, yaml.YAMLError) as exc:
		parser.error(f"cannot read config {args.config}: {exc}")
	if not isinstance(cfg, dict):
		parser.error(f"config {args.config} must be a mapping with quadrature and verify sections")
	if args.config:
		logger.info("config %s: sections %s", args.config, sorted(cfg))
	try:
		qcfg = QuadratureConfig(**(cfg.get("quadrature") or {}))
		vcfg = VerifyConfig(**(cfg.get("verify") or {}))
	except (TypeError, ValueError) as exc:
		parser.error(f"bad config {args.config}: {exc}")
	env_tol = os.environ.get(TOL_ENV)
	if env_tol:
		try:
			vcfg.tol = float(env_tol)
		except ValueError:
			parser.error(f"{TOL_ENV} must be a number, got {env_tol!r}")
		if not vcfg.tol > 0:
			parser.error(f"{TOL_ENV} must be > 0, got {env_tol!r}")
		logger.info("verify tolerance %s from %s", vcfg.tol, TOL_ENV)
	return qcfg, vcfg


def _write(data: bytes, out: Optional[str]) -> None:
	"""UTF-8 bytes to `out`, or to stdout without newline translation."""
	try:
		if out:
			Path(out).parent.mkdir(parents=True, exist_ok=True)
			with open(out, "wb") as f:
				f.write(data)
			return
		sys.stdout.flush()
		buffer = getattr(sys.stdout, "buffer", None)
		if buffer is None:
			sys.stdout.write(data.decode("utf-8"))
		else:
			buffer.write(data)
			buffer.flush()
	except OSError as exc:
		raise TableIOError(f"could not write {out or 'stdout'}: {exc}") from exc


def _emit(table, fmt: str, out: Optional[str]) -> None:
	stream = io.BytesIO()
	emit_table(table, fmt, stream)
	_write(stream.getvalue(), out)


# --- subcommands ---

def cmd_eval(args: argparse.Namespace, qcfg: QuadratureConfig) -> int:
	closed = quad = None
	if args.method in ("closed", "both"):
		if args.f == "log":
			if args.a != 0:
				raise DomainError(f"the log closed form is defined for lower limit 0 only, got a={args.a}")
			expr = d_log(args.order)
		elif args.a > 0:
			expr = d_power(args.order, args.r, args.a)
		else:
			expr = d_power_extended(args.order, args.r)
		closed = expr.evaluate(args.x)
		print(f"closed: {fmt_float(closed)}", flush=True)
	if args.method in ("quad", "both"):
		f = Integrand.log() if args.f == "log" else Integrand.power(args.r)
		quad = rl_apply(f, args.order, args.x, args.a, qcfg)
		print(f"quad: {fmt_float(quad)}", flush=True)
	if closed is not None and quad is not None:
		gap = abs(closed - quad)
		print(f"discrepancy: {fmt_float(gap)}", flush=True)
		return 0 if gap < EVAL_AGREEMENT else 1
	return 0


def cmd_harmonic(args: argparse.Namespace, qcfg: QuadratureConfig, vcfg: VerifyConfig) -> int:
	h = harmonic_ext(args.rho)
	print(f"h_rho: {fmt_float(h)}", flush=True)
	if args.rho >= 0 and float(args.rho).is_integer():
		n = int(args.rho)
		exact = harmonic_fraction(n)
		print(f"h_n_exact: {fmt_float(harmonic_int(n))}", flush=True)
		print(f"h_n_fraction: {exact.numerator}/{exact.denominator}", flush=True)
	if args.x is not None:
		via = harmonic_via_integral(args.rho, args.x, qcfg)
		gap = abs(via - h)
		print(f"h_via_integral: {fmt_float(via)}", flush=True)
		print(f"discrepancy: {fmt_float(gap)}", flush=True)
		return 0 if gap < vcfg.tol else 1
	return 0


def cmd_zeta(args: argparse.Namespace) -> int:
	poly = zeta_partial(args.m, args.n)
	direct = zeta_partial_direct(args.m, args.n)
	gap = abs(poly - direct)
	print(f"zeta_polygamma: {fmt_float(poly)}", flush=True)
	print(f"zeta_direct: {fmt_float(direct)}", flush=True)
	print(f"discrepancy: {fmt_float(gap)}", flush=True)
	return 0 if gap < ZETA_AGREEMENT else 1


def _near_pole(rho: float) -> bool:
	z = 1.0 + rho
	k = round(z)
	return k <= 0 and abs(z - k) < POLE_GAP


def curve_rows(rho_min: float, rho_max: float, step: float) -> List[List[str]]:
	"""Rows of the h(ρ) curve; pole-adjacent samples become '#' comment rows."""
	count = int(math.floor((rho_max - rho_min) / step + 1e-9))
	rows: List[List[str]] = []
	for k in range(count + 1):
		rho = rho_min + k * step
		if _near_pole(rho):
			rows.append([f"# skipped rho={fmt_float(rho)} (pole of h)"])
			continue
		n = round(rho)
		exact = ""
		if n >= 0 and abs(rho - n) < 1e-9:
			rho = float(n)
			exact = fmt_float(harmonic_int(n))
		rows.append([fmt_float(rho), fmt_float(harmonic_ext(rho)), exact])
	return rows


def cmd_curve(args: argparse.Namespace) -> int:
	buf = io.StringIO()
	writer = csv.writer(buf, lineterminator="\n")
	writer.writerow(["rho", "h_rho", "h_n_exact"])
	for row in curve_rows(args.rho_min, args.rho_max, args.step):
		if row[0].startswith("#"):
			buf.write(row[0] + "\n")
		else:
			writer.writerow(row)
	_write(buf.getvalue().encode("utf-8"), args.out)
	return 0


def cmd_verify(args: argparse.Namespace, qcfg: QuadratureConfig, vcfg: VerifyConfig) -> int:
	results = run_suite(args.suite, vcfg, qcfg)
	for res in results:
		print(res.line(), flush=True)
	passed = sum(r.passed for r in results)
	print(f"{passed}/{len(results)} properties passed", flush=True)
	if args.out:
		out_dir = Path(args.out)
		out_dir.mkdir(parents=True, exist_ok=True)
		summary = {
			"suite": args.suite,
			"tolerance": vcfg.tol,
			"passed": passed,
			"total": len(results),
			"properties": [r.to_dict() for r in results],
		}
		with open(out_dir / "summary.json", "w", encoding="utf-8") as f:
			json.dump(summary, f, indent=2)
	return 0 if passed == len(results) else 1


def main(argv: Optional[Sequence[str]] = None) -> int:
	parser, args = parse_args(argv)
	validate(parser, args)
	logging.basicConfig(level=getattr(logging, args.log_level), format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
	qcfg, vcfg = build_configs(parser, args)
	try:
		if args.command == "eval":
			return cmd_eval(args, qcfg)
		if args.command == "harmonic":
			return cmd_harmonic(args, qcfg, vcfg)
		if args.command == "zeta":
			return cmd_zeta(args)
		if args.command == "table1":
			_emit(table1(args.m_range, args.n_range), args.format, args.out)
			return 0
		if args.command == "gentable":
			_emit(gen_table(args.rho_list, args.r_list, args.a), args.format, args.out)
			return 0
		if args.command == "regions":
			_emit(region_table(args.sigma_list, args.r_list), args.format, args.out)
			return 0
		if args.command == "curve":
			return cmd_curve(args)
		return cmd_verify(args, qcfg, vcfg)
	except FracCalcError as exc:
		print(f"error: {exc}", file=sys.stderr, flush=True)
		return 1


if __name__ == "__main__":
	sys.exit(main())
