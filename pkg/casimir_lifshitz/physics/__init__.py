from .constants import (
    CONSTANTS,
    MPA,
    NM,
    GapConfig,
    PhysicalConstants,
    dimensionless_frequency,
    matsubara_frequency,
)

__all__ = [
    "CONSTANTS",
    "MPA",
    "NM",
    "GapConfig",
    "PhysicalConstants",
    "dimensionless_frequency",
    "matsubara_frequency",
]
