import csv
import io
from enum import Enum
from typing import IO, NamedTuple

from pydantic import BaseModel, ConfigDict

from ..config import OutputFormat
from ..physics import MPA

Cell = float | int | str


class ColumnKind(Enum):
    PRESSURE = "pressure"
    REAL = "real"
    INTEGER = "integer"
    TEXT = "text"


class Column(NamedTuple):
    name: str
    kind: ColumnKind = ColumnKind.REAL


class Report(BaseModel):
    """
    Rows in manifest order. PRESSURE cells are signed pressures in Pa.
    """

    model_config = ConfigDict(frozen=True)
    columns: tuple[Column, ...]
    rows: tuple[tuple[Cell, ...], ...]
    comments: tuple[str, ...] = ()


def format_cell(value: Cell, kind: ColumnKind, fmt: OutputFormat) -> str:
    match kind:
        case ColumnKind.TEXT:
            return str(value)
        case ColumnKind.INTEGER:
            return str(int(value))
        case ColumnKind.PRESSURE:
            # + 0.0 turns -0.0 into 0.0
            value = float(value) / MPA + 0.0
            if fmt is OutputFormat.TABLE:
                return f"{abs(value):.4g}"
            return f"{value:.9e}"
        case ColumnKind.REAL:
            value = float(value) + 0.0
            if fmt is OutputFormat.TABLE:
                return f"{value:.4g}"
            return f"{value:.9e}"


def sign_convention(report: Report, fmt: OutputFormat) -> list[str]:
    if not any(column.kind is ColumnKind.PRESSURE for column in report.columns):
        return []
    if fmt is OutputFormat.TABLE:
        return ["pressures are magnitudes in mPa, 4 significant digits"]
    return ["pressures are signed, in mPa: negative values mean attraction"]


def write_report(report: Report, fmt: OutputFormat, stream: IO[str]) -> None:
    for comment in (*report.comments, *sign_convention(report, fmt)):
        stream.write(f"# {comment}\n")
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow([column.name for column in report.columns])
    for row in report.rows:
        writer.writerow([format_cell(value, column.kind, fmt) for value, column in zip(row, report.columns)])


def render_report(report: Report, fmt: OutputFormat) -> str:
    buffer = io.StringIO()
    write_report(report, fmt, buffer)
    return buffer.getvalue()
