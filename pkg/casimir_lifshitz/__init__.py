from .dielectric import (
    GOLD_NU,
    GOLD_OMEGA_P,
    DielectricModel,
    Drude,
    IdealMetal,
    ModifiedIdealMetal,
    Plasma,
    Tabulated,
    Vacuum,
    ZeroModePolicy,
    eps_imaginary_axis,
    validity_range_diagnostic,
    zero_mode_reflections,
)
from .engine import (
    FreeEnergyResult,
    NumericsSettings,
    PressureResult,
    casimir_pressure,
    free_energy,
    free_energy_per_area,
    matsubara_term,
    reflection_coefficients,
    truncated_matsubara_sum,
)
from .errors import CasimirError
from .optical import (
    Extrapolation,
    PermittivityTable,
    TableAxis,
    interpolate_imaginary_axis,
    kramers_kronig_table,
    kramers_kronig_to_imaginary_axis,
    load_table,
)
from .physics import CONSTANTS, GapConfig, dimensionless_frequency, matsubara_frequency
from .thermodynamics import (
    classical_limit_pressure,
    entropy_per_area,
    entropy_scan,
    ideal_pressure_zero_T,
    sensitivity_dP_da,
)

__all__ = [
    "CONSTANTS",
    "GOLD_NU",
    "GOLD_OMEGA_P",
    "CasimirError",
    "DielectricModel",
    "Drude",
    "Extrapolation",
    "FreeEnergyResult",
    "GapConfig",
    "IdealMetal",
    "ModifiedIdealMetal",
    "NumericsSettings",
    "PermittivityTable",
    "Plasma",
    "PressureResult",
    "Tabulated",
    "TableAxis",
    "Vacuum",
    "ZeroModePolicy",
    "casimir_pressure",
    "classical_limit_pressure",
    "dimensionless_frequency",
    "entropy_per_area",
    "entropy_scan",
    "eps_imaginary_axis",
    "free_energy",
    "free_energy_per_area",
    "ideal_pressure_zero_T",
    "interpolate_imaginary_axis",
    "kramers_kronig_table",
    "kramers_kronig_to_imaginary_axis",
    "load_table",
    "matsubara_frequency",
    "matsubara_term",
    "reflection_coefficients",
    "sensitivity_dP_da",
    "truncated_matsubara_sum",
    "validity_range_diagnostic",
    "zero_mode_reflections",
]
