import math

from pydantic import BaseModel, ConfigDict, Field
from scipy import constants as codata
from typeguard import typechecked

from ..errors import FrequencyError

NM = 1e-9
MPA = 1e-3


class PhysicalConstants(BaseModel):
    """
    CODATA 2018 values, SI units. Frozen so table fixtures stay reproducible.
    """

    model_config = ConfigDict(frozen=True)
    hbar: float = codata.hbar
    k_boltzmann: float = codata.Boltzmann
    c: float = codata.c

    @property
    def matsubara_unit(self) -> float:
        """
        2π k_B / ħ in rad/(s·K); ζ_m = m · matsubara_unit · T.
        """
        return 2.0 * math.pi * self.k_boltzmann / self.hbar


CONSTANTS = PhysicalConstants()
_MATSUBARA_UNIT = CONSTANTS.matsubara_unit


class GapConfig(BaseModel):
    """
    One physical scenario: plate separation (m) and temperature (K).
    """

    model_config = ConfigDict(frozen=True)
    separation_a: float = Field(gt=0.0)
    temperature_T: float = Field(gt=0.0)

    @classmethod
    def from_nm(cls, separation_nm: float, temperature_K: float) -> "GapConfig":
        return cls(separation_a=separation_nm * NM, temperature_T=temperature_K)

    @property
    def separation_nm(self) -> float:
        return self.separation_a / NM

    def with_separation(self, separation_a: float) -> "GapConfig":
        return GapConfig(separation_a=separation_a, temperature_T=self.temperature_T)

    def with_temperature(self, temperature_T: float) -> "GapConfig":
        return GapConfig(separation_a=self.separation_a, temperature_T=temperature_T)


def _first_matsubara(T: float) -> float:
    if not T > 0.0:
        raise FrequencyError(f"Temperature must be > 0 K, got {T}")
    return _MATSUBARA_UNIT * T


@typechecked
def matsubara_frequency(m: int, T: float) -> float:
    """
    ζ_m = 2π m k_B T / ħ in rad/s.

    The m = 1 value is computed once and scaled by the integer m, so
    ζ_m == m * ζ_1 holds bitwise and doubling T doubles ζ_m exactly.
    """
    if m < 0:
        raise FrequencyError(f"Matsubara index must be >= 0, got {m}")
    return m * _first_matsubara(T)


@typechecked
def dimensionless_frequency(m: int, gap: GapConfig) -> float:
    """
    q_m = ζ_m a / c.
    """
    return matsubara_frequency(m, gap.temperature_T) * gap.separation_a / CONSTANTS.c
