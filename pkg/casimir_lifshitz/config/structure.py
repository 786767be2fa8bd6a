from enum import Enum
from pathlib import Path
from typing import Annotated, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..dielectric import (
    GOLD_NU,
    GOLD_OMEGA_P,
    ZeroModePolicy,
)
from ..engine import MIN_SEPARATION, MIN_TEMPERATURE, NumericsSettings
from ..optical import Extrapolation, TableAxis
from ..physics import NM

ModelName = Literal["drude", "plasma", "ideal", "mim", "tabulated", "vacuum"]

# the T = 300 K grid of the printed tables
TABLE_SEPARATIONS_NM = [160.0, 200.0, 250.0, 400.0, 500.0, 700.0, 1000.0]
TABLE_TEMPERATURE_K = 300.0


class OutputFormat(Enum):
    TABLE = "table"
    CSV = "csv"


class MaterialConfig(BaseModel):
    """
    Flat key-value material file.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")
    model: ModelName = "drude"
    omega_p_rad_s: float = Field(default=GOLD_OMEGA_P, gt=0.0)
    nu_rad_s: float = Field(default=GOLD_NU, ge=0.0)
    data_file: str | None = None
    data_axis: TableAxis = TableAxis.IMAGINARY
    extrapolation: Extrapolation = Extrapolation.ERROR
    kk_points_per_decade: Annotated[int, Field(gt=0)] | None = 40

    @model_validator(mode="after")
    def _tabulated_needs_data(self) -> "MaterialConfig":
        if self.model == "tabulated" and not self.data_file:
            raise ValueError("model 'tabulated' needs a data_file")
        return self


Separation = Annotated[float, Field(ge=MIN_SEPARATION / NM)]
Temperature = Annotated[float, Field(ge=MIN_TEMPERATURE)]


class RunManifest(BaseModel):
    """
    Everything one CLI invocation computes. Defaults reproduce the T = 300 K table.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")
    material: Path | None = None
    model: ModelName | None = None
    omega_p_rad_s: float | None = Field(default=None, gt=0.0)
    nu_rad_s: float | None = Field(default=None, ge=0.0)
    separations_nm: list[Separation] = Field(default_factory=lambda: list(TABLE_SEPARATIONS_NM), min_length=1)
    temperatures_K: list[Temperature] = Field(default_factory=lambda: [TABLE_TEMPERATURE_K], min_length=1)
    zero_mode: ZeroModePolicy = ZeroModePolicy.MODEL_DEFAULT
    numerics: NumericsSettings = NumericsSettings()
    output: Path | None = None
    format: OutputFormat = OutputFormat.TABLE
    fixture: Path | None = None
    per_term_log: Path | None = None
    dT: float | None = Field(default=None, gt=0.0)
