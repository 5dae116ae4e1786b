from .generating import (
	GOLDEN_TABLE1,
	GridTable,
	TableCell,
	emit_table,
	gen_integral_coeff,
	gen_table,
	golden_table1,
	region_table,
	render_int_cell,
	render_table,
	table1,
)

__all__ = [
	"GOLDEN_TABLE1",
	"GridTable",
	"TableCell",
	"emit_table",
	"gen_integral_coeff",
	"gen_table",
	"golden_table1",
	"region_table",
	"render_int_cell",
	"render_table",
	"table1",
]
