import logging
import re
from enum import Enum
from functools import cached_property
from pathlib import Path
from typing import IO

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from ..errors import TableFormatError, TableValidationError

logger = logging.getLogger(__name__)

MIN_POINTS = 8
_SEPARATOR = re.compile(r"[,\s]+")


class TableAxis(Enum):
    IMAGINARY = "imaginary"
    REAL_LOSS = "real_loss"


class PermittivityTable(BaseModel):
    """
    Permittivity samples on a strictly increasing angular-frequency grid.

    axis=imaginary holds ε(iζ) (all ≥ 1); axis=real_loss holds ε″(ω) (all ≥ 0).
    """

    model_config = ConfigDict(frozen=True)
    axis: TableAxis
    omega: tuple[float, ...]
    values: tuple[float, ...]
    provenance: str = ""

    @model_validator(mode="after")
    def _check_physical(self) -> "PermittivityTable":
        if len(self.omega) != len(self.values):
            raise ValueError(
                f"omega and values differ in length ({len(self.omega)} != {len(self.values)})"
            )
        if len(self.omega) < MIN_POINTS:
            raise ValueError(f"table needs at least {MIN_POINTS} points, got {len(self.omega)}")
        previous = 0.0
        for index, (omega, value) in enumerate(zip(self.omega, self.values)):
            if not omega > previous:
                raise ValueError(f"frequency grid is not strictly increasing at point {index}")
            previous = omega
            if self.axis is TableAxis.IMAGINARY and not value >= 1.0:
                raise ValueError(f"eps(i zeta) must be >= 1, got {value} at point {index}")
            if self.axis is TableAxis.REAL_LOSS and not value >= 0.0:
                raise ValueError(f"eps'' must be >= 0, got {value} at point {index}")
        return self

    @cached_property
    def omega_array(self) -> np.ndarray:
        return np.asarray(self.omega, dtype=float)

    @cached_property
    def values_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)

    @property
    def lower(self) -> float:
        return self.omega[0]

    @property
    def upper(self) -> float:
        return self.omega[-1]

    def __len__(self) -> int:
        return len(self.omega)


def _check_row(axis: TableAxis, omega: float, value: float, line: int, source: str):
    if not omega > 0.0:
        raise TableValidationError(f"{source} line {line}: frequency must be > 0, got {omega}")
    if axis is TableAxis.REAL_LOSS and not value >= 0.0:
        raise TableValidationError(f"{source} line {line}: eps'' must be >= 0, got {value}")
    if axis is TableAxis.IMAGINARY and not value >= 1.0:
        raise TableValidationError(f"{source} line {line}: eps(i zeta) must be >= 1, got {value}")


def parse_rows(lines: list[str], source: str = "<table>") -> list[tuple[int, list[float]]]:
    """
    Splits comment-stripped lines into numeric columns, keeping 1-based line numbers.
    """
    rows: list[tuple[int, list[float]]] = []
    for line_no, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        fields = [field for field in _SEPARATOR.split(text) if field]
        try:
            numbers = [float(field) for field in fields]
        except ValueError:
            raise TableFormatError(f"cannot parse '{raw.rstrip()}' as numbers", line_no, source) from None
        rows.append((line_no, numbers))
    return rows


def load_table(source: IO[bytes], axis: TableAxis, provenance: str = "") -> PermittivityTable:
    """
    Reads the two-column (ω in rad/s, dimensionless value) UTF-8 text format.

    Columns may be separated by whitespace or commas; "#" starts a comment.
    """
    label = provenance or getattr(source, "name", "<table>")
    try:
        text = source.read().decode("utf-8")
    except UnicodeDecodeError as e:
        raise TableFormatError(f"not UTF-8 text ({e.reason})", source=str(label)) from None

    omega: list[float] = []
    values: list[float] = []
    for line_no, numbers in parse_rows(text.splitlines(), str(label)):
        if len(numbers) != 2:
            raise TableFormatError(f"expected 2 columns, got {len(numbers)}", line_no, str(label))
        w, value = numbers
        _check_row(axis, w, value, line_no, str(label))
        if omega and w == omega[-1]:
            raise TableValidationError(f"{label} line {line_no}: duplicate frequency {w}")
        if omega and w < omega[-1]:
            raise TableValidationError(
                f"{label} line {line_no}: frequencies must be strictly increasing ({w} after {omega[-1]})"
            )
        omega.append(w)
        values.append(value)

    if len(omega) < MIN_POINTS:
        raise TableValidationError(f"{label}: table needs at least {MIN_POINTS} points, got {len(omega)}")

    table = PermittivityTable(axis=axis, omega=tuple(omega), values=tuple(values), provenance=str(label))
    if axis is TableAxis.IMAGINARY and np.any(np.diff(table.values_array) > 0.0):
        logger.warning(f"{label}: eps(i zeta) is not monotonically nonincreasing")
    logger.debug(f"loaded {len(table)} {axis.value} points from {label}")
    return table


def load_table_file(path: Path, axis: TableAxis) -> PermittivityTable:
    with open(path, "rb") as stream:
        return load_table(stream, axis, provenance=str(path))


def write_table(table: PermittivityTable, stream: IO[str]) -> None:
    stream.write(f"# {table.provenance or 'permittivity table'} ({table.axis.value})\n")
    for omega, value in zip(table.omega, table.values):
        stream.write(f"{omega:.9e} {value:.9e}\n")


def drude_loss_table(
    omega_p: float,
    nu: float,
    omega_min: float = 1e9,
    omega_max: float = 1e19,
    n_points: int = 400,
) -> PermittivityTable:
    """
    ε″(ω) = ω_p² ν / (ω (ω² + ν²)) sampled on a log-spaced grid.
    """
    omega = np.logspace(np.log10(omega_min), np.log10(omega_max), n_points)
    loss = omega_p**2 * nu / (omega * (omega**2 + nu**2))
    return PermittivityTable(
        axis=TableAxis.REAL_LOSS,
        omega=tuple(float(w) for w in omega),
        values=tuple(float(v) for v in loss),
        provenance=f"drude omega_p={omega_p:.6e} nu={nu:.6e}",
    )
