from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import BinaryIO, List, Optional, Sequence, Tuple, Union

from ..closed.forms import classify_region, d_int_power, d_power, d_power_log
from ..closed.terms import ClosedFormExpr
from ..errors import DomainError, PoleError, TableIOError
from ..utils.math_utils import as_exact, factorial_ratio, fmt_key, is_integer, is_nonpositive_integer

Key = Union[int, float]

TABLE1_M_RANGE = (-3, 2)
TABLE1_N_RANGE = (-3, 3)
TABLE1_LIMIT = 10
GOLDEN_TABLE1 = Path(__file__).with_name("table1_golden.txt")


@dataclass(frozen=True)
class TableCell:
	row_key: Key
	col_key: Key
	expr: Optional[ClosedFormExpr]
	display: str


@dataclass(frozen=True)
class GridTable:
	rows: Tuple[Key, ...]
	cols: Tuple[Key, ...]
	cells: Tuple[TableCell, ...]
	corner: str = ""

	def __post_init__(self):
		if len(self.cells) != len(self.rows) * len(self.cols):
			raise ValueError(f"{len(self.cells)} cells for a {len(self.rows)}x{len(self.cols)} table")

	def cell(self, i: int, j: int) -> TableCell:
		return self.cells[i * len(self.cols) + j]

	def row(self, i: int) -> List[TableCell]:
		return [self.cell(i, j) for j in range(len(self.cols))]


# --- integer-order table rendering ---

def _factorial_text(num: int, den: int) -> str:
	"""`num!/den!` with 0! and 1! left out; empty when the ratio is 1."""
	if num == den:
		return ""
	top = f"{num}!" if num > 1 else ""
	bottom = f"{den}!" if den > 1 else ""
	if top and bottom:
		return f"{top}/{bottom}"
	if bottom:
		return f"1/{bottom}"
	return top


def _x_text(p: int) -> str:
	if p == 0:
		return ""
	if p == 1:
		return "x"
	return f"x^{p}"


def _log_text(folds: int) -> str:
	if folds == 0:
		return "log x"
	if folds == 1:
		return "∫log x (dx)"
	return f"∫log x (dx)^{folds}"


def _join(sign: int, coeff: str, body: str) -> str:
	if coeff and body:
		text = f"{coeff} {body}"
	else:
		text = coeff or body or "1"
	return ("-" if sign < 0 else "") + text


def render_int_cell(n: int, m: int, expr: ClosedFormExpr) -> str:
	"""
	Factorial-ratio text of D^n x^m. The text is derived from (m, n) and
	cross-checked against the coefficient of expr.
	"""
	if expr.is_zero():
		return "0"
	if m >= 0:
		num, den, sign = m, m - n, 1
		body = _x_text(m - n)
	elif m < n:
		k = -m
		num, den, sign = k - 1 + n, k - 1, (-1 if n % 2 else 1)
		body = _x_text(m - n)
	else:
		k = -m
		num, den, sign = 0, k - 1, (-1 if (k - 1) % 2 else 1)
		body = _log_text(m - n)
		# the leading log term of an n-fold integral carries an extra 1/(m-n)!
		expected = sign * factorial_ratio(num, den) / math.factorial(m - n)
		actual = expr.coefficient(m - n, 1)
		if Fraction(actual) != expected:
			raise ValueError(f"cell m={m}, n={n}: coefficient {actual} does not match {expected}")
		return _join(sign, _factorial_text(num, den), body)
	expected = sign * factorial_ratio(num, den)
	actual = expr.coefficient(m - n, 0)
	if Fraction(actual) != expected:
		raise ValueError(f"cell m={m}, n={n}: coefficient {actual} does not match {expected}")
	return _join(sign, _factorial_text(num, den), body)


def _int_range(rng: Tuple[int, int], name: str) -> List[int]:
	lo, hi = rng
	if not (is_integer(lo) and is_integer(hi)):
		raise DomainError(f"{name} must be an integer interval, got {rng}")
	if lo < -TABLE1_LIMIT or hi > TABLE1_LIMIT:
		raise DomainError(f"{name}={rng} must lie within [-{TABLE1_LIMIT}, {TABLE1_LIMIT}]")
	return list(range(int(lo), int(hi) + 1))


def table1(m_range: Tuple[int, int] = TABLE1_M_RANGE, n_range: Tuple[int, int] = TABLE1_N_RANGE) -> GridTable:
	"""D^n x^m for integer m (rows, descending) and n (columns, ascending), lower limit 0."""
	ms = sorted(_int_range(m_range, "m_range"), reverse=True)
	ns = _int_range(n_range, "n_range")
	cells: List[TableCell] = []
	for m in ms:
		for n in ns:
			expr = d_int_power(n, m, 0.0)
			cells.append(TableCell(m, n, expr, render_int_cell(n, m, expr)))
	return GridTable(tuple(ms), tuple(ns), tuple(cells), corner="m\\n")


# --- generating integrals of x^r (log x)^a ---

def gen_integral_coeff(rho: float, r: float, a: int) -> ClosedFormExpr:
	"""
	ρ-fold integral from 0 of x^r (a = 0) or x^r log x (a = 1).

	a = 0 is the power rule with σ = −ρ. a = 1 is the derived formula
	Γ(1+r)/Γ(1+r+ρ)·x^{r+ρ}·(log x + ψ(1+r) − ψ(1+r+ρ)), checked against
	quadrature by the closed-vs-quad suite.
	"""
	if r <= -1:
		raise DomainError(f"gen_integral_coeff needs r > -1, got r={r}")
	if a not in (0, 1):
		raise DomainError(f"gen_integral_coeff supports a in {{0, 1}}, got a={a}")
	if is_integer(rho) and rho < 0:
		raise PoleError(f"Γ(1+rho) has a pole at rho={rho}")
	sigma = as_exact(-rho)
	if a == 0:
		return d_power(sigma, r, 0.0)
	if is_nonpositive_integer(1 + r + rho):
		raise PoleError(f"Γ(1+r+rho) has a pole at r={r}, rho={rho}")
	return d_power_log(sigma, r)


def gen_table(rho_list: Sequence[float], r_list: Sequence[float], a: int) -> GridTable:
	"""One row per r, one column per ρ; cells rendered decimally."""
	rows = tuple(as_exact(r) for r in r_list)
	cols = tuple(as_exact(rho) for rho in rho_list)
	cells: List[TableCell] = []
	for r in rows:
		for rho in cols:
			expr = gen_integral_coeff(rho, r, a)
			cells.append(TableCell(r, rho, expr, expr.render()))
	return GridTable(rows, cols, tuple(cells), corner=f"r\\rho (a={a})")


def region_table(sigma_list: Sequence[float], r_list: Sequence[float]) -> GridTable:
	"""Region tag of every (σ, r) pair; rows r descending, columns σ."""
	rows = tuple(sorted((as_exact(r) for r in r_list), reverse=True))
	cols = tuple(as_exact(s) for s in sigma_list)
	cells = tuple(
		TableCell(r, s, None, classify_region(s, r).value)
		for r in rows
		for s in cols
	)
	return GridTable(rows, cols, cells, corner="r\\sigma")


# --- emission ---

def render_table(table: GridTable, fmt: str) -> str:
	header = [table.corner] + [fmt_key(c) for c in table.cols]
	body = [[fmt_key(r)] + [c.display for c in table.row(i)] for i, r in enumerate(table.rows)]
	if fmt == "csv":
		buf = io.StringIO()
		writer = csv.writer(buf, lineterminator="\n")
		writer.writerow(header)
		writer.writerows(body)
		return buf.getvalue()
	if fmt == "text":
		lines = [header] + body
		widths = [max(len(line[j]) for line in lines) for j in range(len(header))]
		out = [" | ".join(v.rjust(w) for v, w in zip(header, widths))]
		out.append("-+-".join("-" * w for w in widths))
		for line in body:
			out.append(" | ".join(v.rjust(w) for v, w in zip(line, widths)))
		return "\n".join(out) + "\n"
	raise DomainError(f"unknown table format {fmt!r}; expected csv or text")


def emit_table(table: GridTable, fmt: str, stream: BinaryIO) -> None:
	"""Write the rendering as UTF-8 bytes."""
	data = render_table(table, fmt).encode("utf-8")
	try:
		stream.write(data)
		stream.flush()
	except OSError as exc:
		raise TableIOError(f"could not write {fmt} table: {exc}") from exc


def golden_table1() -> str:
	return GOLDEN_TABLE1.read_text(encoding="utf-8")
