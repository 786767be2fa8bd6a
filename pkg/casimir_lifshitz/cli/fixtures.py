import csv
import logging
from importlib import resources
from pathlib import Path

from pydantic import BaseModel, ConfigDict

from ..errors import TableFormatError

logger = logging.getLogger(__name__)

FIXTURE_PACKAGE = "casimir_lifshitz.fixtures"
SEPARATION_COLUMN = "separation_nm"
TEMPERATURE_COLUMN = "temperature_K"


class ReferenceTable(BaseModel):
    """
    A reference pressure table: "#" comment lines (optionally "key: value"
    metadata), one header row, then numeric rows.
    """

    model_config = ConfigDict(frozen=True)
    source: str
    metadata: dict[str, str]
    columns: tuple[str, ...]
    rows: tuple[tuple[float, ...], ...]

    def column(self, name: str) -> list[float]:
        try:
            index = self.columns.index(name)
        except ValueError:
            raise KeyError(f"{self.source} has no column '{name}'") from None
        return [row[index] for row in self.rows]

    @property
    def pressure_columns(self) -> list[str]:
        return [name for name in self.columns if name.endswith("_mPa")]

    @property
    def temperature(self) -> float | None:
        if TEMPERATURE_COLUMN in self.metadata:
            return float(self.metadata[TEMPERATURE_COLUMN])
        return None


def parse_reference_table(text: str, source: str) -> ReferenceTable:
    metadata: dict[str, str] = {}
    columns: tuple[str, ...] | None = None
    rows: list[tuple[float, ...]] = []
    for line_no, record in enumerate(csv.reader(text.splitlines()), start=1):
        if not record or not "".join(record).strip():
            continue
        if record[0].lstrip().startswith("#"):
            key, sep, value = ",".join(record).lstrip("# ").partition(":")
            if sep and columns is None:
                metadata[key.strip()] = value.strip()
            continue
        fields = [field.strip() for field in record]
        if columns is None:
            if SEPARATION_COLUMN not in fields:
                raise TableFormatError(f"header must contain '{SEPARATION_COLUMN}'", line_no, source)
            columns = tuple(fields)
            continue
        if len(fields) != len(columns):
            raise TableFormatError(f"expected {len(columns)} fields, got {len(fields)}", line_no, source)
        try:
            rows.append(tuple(float(field) for field in fields))
        except ValueError:
            raise TableFormatError(f"non-numeric field in {fields}", line_no, source) from None
    if columns is None:
        raise TableFormatError("missing header row", source=source)
    if not rows:
        raise TableFormatError("no data rows", source=source)
    logger.debug(f"loaded reference table {source}: {len(rows)} rows, columns {columns}")
    return ReferenceTable(source=source, metadata=metadata, columns=columns, rows=tuple(rows))


def packaged_fixture(name: str) -> Path:
    return Path(str(resources.files(FIXTURE_PACKAGE).joinpath(f"{name}.csv")))


def load_reference_table(path: Path | str) -> ReferenceTable:
    """
    Loads a fixture file. A bare name such as "table3" refers to a shipped fixture.
    """
    path = Path(path)
    if not path.exists() and path.suffix == "" and path.parent == Path("."):
        path = packaged_fixture(path.name)
    if not path.is_file():
        raise FileNotFoundError(f"fixture file not found: {path}")
    return parse_reference_table(path.read_text(encoding="utf-8"), str(path))
