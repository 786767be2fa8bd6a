from .models import (
    GOLD_NU,
    GOLD_OMEGA_P,
    INFINITE,
    DielectricModel,
    Drude,
    IdealMetal,
    InfinitePermittivity,
    ModifiedIdealMetal,
    Permittivity,
    Plasma,
    Tabulated,
    Vacuum,
    eps_imaginary_axis,
)
from .validity import (
    DRUDE_UPPER_VALIDITY,
    PLASMA_LOWER_VALIDITY,
    log_validity,
    validity_range_diagnostic,
    validity_warnings_once,
)
from .zero_mode import (
    TeZeroMode,
    ZeroModePolicy,
    ZeroModeContent,
    plasma_te_zero_reflection_sq,
    zero_mode_reflections,
)

__all__ = [
    "DRUDE_UPPER_VALIDITY",
    "GOLD_NU",
    "GOLD_OMEGA_P",
    "INFINITE",
    "PLASMA_LOWER_VALIDITY",
    "DielectricModel",
    "Drude",
    "IdealMetal",
    "InfinitePermittivity",
    "ModifiedIdealMetal",
    "Permittivity",
    "Plasma",
    "Tabulated",
    "TeZeroMode",
    "Vacuum",
    "ZeroModePolicy",
    "ZeroModeContent",
    "eps_imaginary_axis",
    "log_validity",
    "plasma_te_zero_reflection_sq",
    "validity_range_diagnostic",
    "validity_warnings_once",
    "zero_mode_reflections",
]
