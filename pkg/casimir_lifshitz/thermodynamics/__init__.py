from .entropy import (
    DEFAULT_STEP,
    NERNST_STEP,
    EntropyScan,
    default_step,
    entropy_per_area,
    entropy_scan,
)
from .limits import (
    classical_limit_pressure,
    ideal_free_energy_zero_T,
    ideal_pressure_zero_T,
    mim_entropy_limit,
    sensitivity_dP_da,
)

__all__ = [
    "DEFAULT_STEP",
    "NERNST_STEP",
    "EntropyScan",
    "classical_limit_pressure",
    "default_step",
    "entropy_per_area",
    "entropy_scan",
    "ideal_free_energy_zero_T",
    "ideal_pressure_zero_T",
    "mim_entropy_limit",
    "sensitivity_dP_da",
]
