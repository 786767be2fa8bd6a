import math

from typeguard import typechecked

from ..dielectric import DielectricModel, TeZeroMode, ZeroModePolicy, zero_mode_reflections
from ..engine import ZETA_3, NumericsSettings, casimir_pressure
from ..physics import CONSTANTS, GapConfig

SENSITIVITY_REL_STEP = 1e-3


def _check_separation(a: float) -> None:
    if not a > 0.0:
        raise ValueError(f"separation must be > 0 m, got {a}")


@typechecked
def ideal_pressure_zero_T(a: float) -> float:
    """
    −π² ħ c / (240 a⁴)
    """
    _check_separation(a)
    return -(math.pi**2) * CONSTANTS.hbar * CONSTANTS.c / (240.0 * a**4)


@typechecked
def ideal_free_energy_zero_T(a: float) -> float:
    """
    −π² ħ c / (720 a³)
    """
    _check_separation(a)
    return -(math.pi**2) * CONSTANTS.hbar * CONSTANTS.c / (720.0 * a**3)


@typechecked
def classical_limit_pressure(
    a: float,
    T: float,
    policy: ZeroModePolicy = ZeroModePolicy.FORCE_TM_ONLY,
    model: DielectricModel | None = None,
) -> float:
    """
    Large-aT limit, where only the m = 0 term survives: −k_B T ζ(3)/(8π a³) with the
    TM zero mode alone, twice that when the TE zero mode reflects as well.
    MODEL_DEFAULT resolves through `model` (plasma counts as TM+TE).
    """
    _check_separation(a)
    if not T > 0.0:
        raise ValueError(f"temperature must be > 0 K, got {T}")
    if policy is ZeroModePolicy.MODEL_DEFAULT:
        if model is None:
            raise ValueError("MODEL_DEFAULT needs a model to resolve the zero-mode content")
        with_te = zero_mode_reflections(model, policy).te is not TeZeroMode.NONE
    else:
        with_te = policy is ZeroModePolicy.FORCE_TM_AND_TE
    modes = 2.0 if with_te else 1.0
    return -modes * CONSTANTS.k_boltzmann * T * ZETA_3 / (8.0 * math.pi * a**3)


@typechecked
def mim_entropy_limit(a: float) -> float:
    """
    T → 0 entropy per area of the modified ideal metal, −k_B ζ(3)/(16π a²): the TE
    zero-mode free energy it drops is linear in T.
    """
    _check_separation(a)
    return -CONSTANTS.k_boltzmann * ZETA_3 / (16.0 * math.pi * a**2)


@typechecked
def sensitivity_dP_da(
    a: float,
    T: float,
    model: DielectricModel,
    policy: ZeroModePolicy = ZeroModePolicy.MODEL_DEFAULT,
    settings: NumericsSettings = NumericsSettings(),
    rel_step: float = SENSITIVITY_REL_STEP,
) -> float:
    """
    dP/da in Pa/m by a central difference with step rel_step · a.
    """
    _check_separation(a)
    h = rel_step * a
    upper = casimir_pressure(GapConfig(separation_a=a + h, temperature_T=T), model, policy, settings)
    lower = casimir_pressure(GapConfig(separation_a=a - h, temperature_T=T), model, policy, settings)
    return (upper.pressure - lower.pressure) / (2.0 * h)
