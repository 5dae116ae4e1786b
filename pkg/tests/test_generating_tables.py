import io
from fractions import Fraction

import pytest

from fraccalc.errors import DomainError, PoleError, TableIOError
from fraccalc.tables import (
	emit_table,
	gen_integral_coeff,
	gen_table,
	golden_table1,
	region_table,
	render_table,
	table1,
)


def test_table1_matches_golden():
	assert render_table(table1(), "text") == golden_table1()


def test_table1_csv():
	lines = render_table(table1(), "csv").splitlines()
	assert lines[0] == "m\\n,-3,-2,-1,0,1,2,3"
	assert lines[1] == "2,2!/5! x^5,2!/4! x^4,2!/3! x^3,x^2,2! x,2!,0"
	assert lines[-1] == "-3,1/2! log x,1/2! x^-1,-1/2! x^-2,x^-3,-3!/2! x^-4,4!/2! x^-5,-5!/2! x^-6"


def test_table1_cells_keep_expressions():
	t = table1((-1, 1), (-1, 1))
	assert t.rows == (1, 0, -1)
	cell = t.cell(2, 0)  # m=-1, n=-1
	assert cell.display == "log x"
	assert cell.expr.coefficient(0, 1) == 1


def test_table1_single_and_empty_ranges():
	one = table1((0, 0), (0, 0))
	assert one.cell(0, 0).display == "1"
	empty = table1((2, 1), (0, 1))
	assert empty.rows == () and empty.cells == ()
	assert render_table(empty, "csv") == "m\\n,0,1\n"


def test_table1_range_limit():
	with pytest.raises(DomainError):
		table1((-11, 0), (0, 1))


def test_gen_integral_coeff():
	# one-fold integral of x log x: x^2/2 log x - x^2/4
	e = gen_integral_coeff(1, 1, 1)
	assert e.coefficient(2, 1) == Fraction(1, 2)
	assert e.coefficient(2, 0) == Fraction(-1, 4)
	assert gen_integral_coeff(1, 0, 0).coefficient(1) == 1
	with pytest.raises(PoleError):
		gen_integral_coeff(-1, 0, 0)
	with pytest.raises(DomainError):
		gen_integral_coeff(0.5, -1.5, 0)


def test_gen_table_layout():
	t = gen_table([0.5, 1], [0, 1], 0)
	assert t.corner == "r\\rho (a=0)"
	assert t.rows == (0, 1) and t.cols == (0.5, 1)
	assert t.cell(1, 1).display == "5.0000000000000000e-01 x^2"


def test_region_table():
	t = region_table([-2, -1, 0.5], [1, -2])
	assert t.rows == (1, -2)
	assert [c.display for c in t.row(1)] == ["Log", "Low", "Low"]
	assert [c.display for c in t.row(0)] == ["Upper", "Upper", "Upper"]


def test_unknown_format():
	with pytest.raises(DomainError):
		render_table(table1(), "xml")


class _BrokenStream(io.RawIOBase):
	def writable(self):
		return True

	def write(self, data):
		raise OSError("disk full")


def test_emit_wraps_write_errors():
	buf = io.BytesIO()
	emit_table(table1((0, 0), (0, 0)), "csv", buf)
	assert buf.getvalue() == "m\\n,0\n0,1\n".encode("utf-8")
	with pytest.raises(TableIOError):
		emit_table(table1(), "text", _BrokenStream())
