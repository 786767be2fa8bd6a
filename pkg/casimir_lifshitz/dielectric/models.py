import math
from enum import Enum
from functools import cached_property
from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field
from typeguard import typechecked

from ..errors import FrequencyError, OutOfRangeError
from ..optical import (
    Extrapolation,
    PermittivityTable,
    TableAxis,
    interpolate_imaginary_axis,
    kramers_kronig_table,
    kramers_kronig_to_imaginary_axis,
    log_grid,
)

# gold: ħω_p = 9.0 eV, ħν = 0.035 eV
GOLD_OMEGA_P = 1.37e16
GOLD_NU = 5.32e13


class InfinitePermittivity(Enum):
    """
    ε = ∞ marker. Reflection code maps it to unit reflection; it never enters arithmetic.
    """

    INFINITE = "infinite"


INFINITE = InfinitePermittivity.INFINITE
Permittivity = float | InfinitePermittivity


def _drude(omega_p: float, nu: float, zeta: float) -> float:
    return 1.0 + omega_p * omega_p / (zeta * (zeta + nu))


class Drude(BaseModel):
    model_config = ConfigDict(frozen=True)
    kind: Literal["drude"] = "drude"
    omega_p: float = Field(default=GOLD_OMEGA_P, gt=0.0)
    nu: float = Field(default=GOLD_NU, ge=0.0)

    def permittivity(self, zeta: float) -> Permittivity:
        return _drude(self.omega_p, self.nu, zeta)


class Plasma(BaseModel):
    model_config = ConfigDict(frozen=True)
    kind: Literal["plasma"] = "plasma"
    omega_p: float = Field(default=GOLD_OMEGA_P, gt=0.0)

    def permittivity(self, zeta: float) -> Permittivity:
        # same expression as Drude with ν = 0, so the reduction is bitwise exact
        return _drude(self.omega_p, 0.0, zeta)


class IdealMetal(BaseModel):
    model_config = ConfigDict(frozen=True)
    kind: Literal["ideal"] = "ideal"

    def permittivity(self, zeta: float) -> Permittivity:
        return INFINITE


class ModifiedIdealMetal(BaseModel):
    """
    ε = ∞ at every Matsubara frequency, with the TE zero mode removed.
    """

    model_config = ConfigDict(frozen=True)
    kind: Literal["mim"] = "mim"

    def permittivity(self, zeta: float) -> Permittivity:
        return INFINITE


class Vacuum(BaseModel):
    model_config = ConfigDict(frozen=True)
    kind: Literal["vacuum"] = "vacuum"

    def permittivity(self, zeta: float) -> Permittivity:
        return 1.0


class Tabulated(BaseModel):
    """
    Measured permittivity. Imaginary-axis tables are interpolated directly; real_loss
    tables go through Kramers-Kronig, either on a pre-computed log grid
    (kk_points_per_decade) or pointwise when that is None.
    """

    model_config = ConfigDict(frozen=True)
    kind: Literal["tabulated"] = "tabulated"
    table: PermittivityTable
    extrapolation: Extrapolation = Extrapolation.ERROR
    nu: float = Field(default=GOLD_NU, ge=0.0)
    kk_points_per_decade: Annotated[int, Field(gt=0)] | None = 40

    @cached_property
    def imaginary_table(self) -> PermittivityTable:
        if self.table.axis is TableAxis.IMAGINARY:
            return self.table
        grid = log_grid(self.table.lower, self.table.upper, self.kk_points_per_decade or 40)
        return kramers_kronig_table(self.table, grid)

    def permittivity(self, zeta: float) -> Permittivity:
        if self.table.axis is TableAxis.REAL_LOSS and self.kk_points_per_decade is None:
            if self.extrapolation is Extrapolation.ERROR and not self.table.lower <= zeta <= self.table.upper:
                raise OutOfRangeError(zeta, self.table.lower, self.table.upper)
            return kramers_kronig_to_imaginary_axis(self.table, zeta)
        return interpolate_imaginary_axis(self.imaginary_table, zeta, self.extrapolation, self.nu)


DielectricModel = Annotated[
    Union[Drude, Plasma, IdealMetal, ModifiedIdealMetal, Vacuum, Tabulated],
    Field(discriminator="kind"),
]


@typechecked
def eps_imaginary_axis(model: DielectricModel, zeta: float) -> Permittivity:
    """
    ε(iζ) for ζ > 0. The zero frequency belongs to zero_mode_reflections.
    """
    if not zeta > 0.0 or math.isinf(zeta):
        raise FrequencyError(f"zeta must be finite and > 0 rad/s, got {zeta}")
    return model.permittivity(zeta)
