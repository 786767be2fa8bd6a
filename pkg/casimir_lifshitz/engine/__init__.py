from .lifshitz import (
    ZERO_MODE_FREE_ENERGY,
    ZERO_MODE_PRESSURE,
    ZETA_3,
    FreeEnergyResult,
    PressureResult,
    Quantity,
    casimir_pressure,
    check_regime,
    free_energy,
    free_energy_per_area,
    matsubara_term,
    zero_mode_free_energy_term,
    zero_mode_term,
)
from .reflection import (
    ReflectionPair,
    free_energy_integrand,
    pressure_integrand,
    reflection_coefficients,
)
from .settings import (
    MIN_SEPARATION,
    MIN_TEMPERATURE,
    NumericsSettings,
    TruncationReference,
)
from .summation import MatsubaraSum, TermRecord, truncated_matsubara_sum

__all__ = [
    "MIN_SEPARATION",
    "MIN_TEMPERATURE",
    "ZERO_MODE_FREE_ENERGY",
    "ZERO_MODE_PRESSURE",
    "ZETA_3",
    "FreeEnergyResult",
    "MatsubaraSum",
    "NumericsSettings",
    "PressureResult",
    "Quantity",
    "ReflectionPair",
    "TermRecord",
    "TruncationReference",
    "casimir_pressure",
    "check_regime",
    "free_energy",
    "free_energy_integrand",
    "free_energy_per_area",
    "matsubara_term",
    "pressure_integrand",
    "reflection_coefficients",
    "truncated_matsubara_sum",
    "zero_mode_free_energy_term",
    "zero_mode_term",
]
