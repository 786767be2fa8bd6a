from .interpolate import Extrapolation, interpolate_imaginary_axis
from .kramers_kronig import (
    KK_TOLERANCE,
    kramers_kronig_table,
    kramers_kronig_to_imaginary_axis,
    log_grid,
)
from .table import (
    MIN_POINTS,
    PermittivityTable,
    TableAxis,
    drude_loss_table,
    load_table,
    load_table_file,
    parse_rows,
    write_table,
)

__all__ = [
    "KK_TOLERANCE",
    "MIN_POINTS",
    "Extrapolation",
    "PermittivityTable",
    "TableAxis",
    "drude_loss_table",
    "interpolate_imaginary_axis",
    "kramers_kronig_table",
    "kramers_kronig_to_imaginary_axis",
    "load_table",
    "load_table_file",
    "log_grid",
    "parse_rows",
    "write_table",
]
