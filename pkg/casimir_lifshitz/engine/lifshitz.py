import logging
import math
from enum import Enum
from functools import partial

from pydantic import BaseModel, ConfigDict
from scipy.special import zeta as riemann_zeta
from typeguard import typechecked

from ..dielectric import (
    DielectricModel,
    InfinitePermittivity,
    Tabulated,
    TeZeroMode,
    ZeroModePolicy,
    eps_imaginary_axis,
    log_validity,
    zero_mode_reflections,
)
from ..errors import RegimeError
from ..numerics import adaptive_quad
from ..physics import CONSTANTS, GapConfig, dimensionless_frequency, matsubara_frequency
from .reflection import ReflectionPair, free_energy_integrand, pressure_integrand, reflection_coefficients
from .settings import MIN_SEPARATION, MIN_TEMPERATURE, NumericsSettings
from .summation import MatsubaraSum, TermRecord, truncated_matsubara_sum

logger = logging.getLogger(__name__)

ZETA_3 = float(riemann_zeta(3.0))
# ½ ∫₀^∞ y²/(e^{2y} − 1) dy for one perfectly reflecting polarization
ZERO_MODE_PRESSURE = ZETA_3 / 8.0
# ½ ∫₀^∞ y ln(1 − e^{−2y}) dy for one perfectly reflecting polarization
ZERO_MODE_FREE_ENERGY = -ZETA_3 / 8.0


class Quantity(Enum):
    PRESSURE = "pressure"
    FREE_ENERGY = "free_energy"


_INTEGRANDS = {
    Quantity.PRESSURE: pressure_integrand,
    Quantity.FREE_ENERGY: free_energy_integrand,
}


class PressureResult(BaseModel):
    """
    Signed pressure in Pa (negative = attractive) with the columns of the
    printed tables: highest Matsubara frequency and number of m ≥ 1 terms.
    """

    model_config = ConfigDict(frozen=True)
    gap: GapConfig
    pressure: float
    n_terms: int
    highest_frequency: float
    per_term_log: tuple[TermRecord, ...] | None = None


class FreeEnergyResult(BaseModel):
    model_config = ConfigDict(frozen=True)
    gap: GapConfig
    free_energy: float
    n_terms: int
    highest_frequency: float
    per_term_log: tuple[TermRecord, ...] | None = None


def check_regime(gap: GapConfig) -> None:
    if gap.separation_a < MIN_SEPARATION:
        raise RegimeError(
            f"separation {gap.separation_a:.3e} m is below the validated regime (>= {MIN_SEPARATION:.0e} m)"
        )
    if gap.temperature_T < MIN_TEMPERATURE:
        raise RegimeError(
            f"temperature {gap.temperature_T:.3e} K is below the validated regime (>= {MIN_TEMPERATURE:.0e} K)"
        )


def _term(
    m: int, gap: GapConfig, model: DielectricModel, settings: NumericsSettings, quantity: Quantity
) -> float:
    q = dimensionless_frequency(m, gap)
    if q >= settings.y_max:
        return 0.0
    eps = eps_imaginary_axis(model, matsubara_frequency(m, gap.temperature_T))
    if not isinstance(eps, InfinitePermittivity) and eps == 1.0:
        return 0.0
    integrand = _INTEGRANDS[quantity]

    def at(y: float) -> float:
        return integrand(reflection_coefficients(eps, y, q), y)

    return adaptive_quad(
        at,
        q,
        settings.y_max,
        rel_tol=settings.integral_tol,
        abs_tol=settings.integral_abs_floor,
        breakpoints=(q + 1.0,),
        limit=settings.quad_limit,
    )


@typechecked
def matsubara_term(m: int, gap: GapConfig, model: DielectricModel, settings: NumericsSettings) -> float:
    """
    ∫_{q_m}^{y_max} y² Σ_pol (e^{2y}/Δ² − 1)⁻¹ dy for one Matsubara index m ≥ 1.
    """
    if m < 1:
        raise ValueError(f"matsubara_term needs m >= 1, got {m}; use zero_mode_term for m = 0")
    return _term(m, gap, model, settings, Quantity.PRESSURE)


def _zero_mode(
    gap: GapConfig,
    model: DielectricModel,
    policy: ZeroModePolicy,
    settings: NumericsSettings,
    quantity: Quantity,
) -> float:
    content = zero_mode_reflections(model, policy)
    closed_form = ZERO_MODE_PRESSURE if quantity is Quantity.PRESSURE else ZERO_MODE_FREE_ENERGY
    integrand = _INTEGRANDS[quantity]

    def half_integral(mode_sq) -> float:
        return 0.5 * adaptive_quad(
            lambda y: integrand(ReflectionPair(mode_sq(y), 0.0), y),
            0.0,
            settings.y_max,
            rel_tol=settings.integral_tol,
            abs_tol=settings.integral_abs_floor,
            breakpoints=(1.0,),
            limit=settings.quad_limit,
        )

    if content.tm_sq == 1.0:
        tm = closed_form
    elif content.tm_sq == 0.0:
        tm = 0.0
    else:
        tm = half_integral(lambda y: content.tm_sq)

    match content.te:
        case TeZeroMode.NONE:
            te = 0.0
        case TeZeroMode.UNIT:
            te = closed_form
        case TeZeroMode.PLASMA:
            te = half_integral(lambda y: content.te_sq(y, gap.separation_a))
    return tm + te


@typechecked
def zero_mode_term(
    gap: GapConfig,
    model: DielectricModel,
    policy: ZeroModePolicy = ZeroModePolicy.MODEL_DEFAULT,
    settings: NumericsSettings = NumericsSettings(),
) -> float:
    """
    The m = 0 pressure term including its ½ weight. Perfect TM (and TE) reflection
    uses the closed form ζ(3)/8 per polarization; only the plasma TE zero mode is
    integrated numerically.
    """
    return _zero_mode(gap, model, policy, settings, Quantity.PRESSURE)


@typechecked
def zero_mode_free_energy_term(
    gap: GapConfig,
    model: DielectricModel,
    policy: ZeroModePolicy = ZeroModePolicy.MODEL_DEFAULT,
    settings: NumericsSettings = NumericsSettings(),
) -> float:
    return _zero_mode(gap, model, policy, settings, Quantity.FREE_ENERGY)


def _matsubara_sum(
    gap: GapConfig,
    model: DielectricModel,
    policy: ZeroModePolicy,
    settings: NumericsSettings,
    quantity: Quantity,
    per_term_log: bool,
) -> MatsubaraSum:
    check_regime(gap)
    if isinstance(model, Tabulated):
        # build the imaginary-axis grid once, before any worker process receives the model
        model.imaginary_table
    outcome = truncated_matsubara_sum(
        partial(_term, gap=gap, model=model, settings=settings, quantity=quantity),
        _zero_mode(gap, model, policy, settings, quantity),
        settings,
        dimensionless=lambda m: dimensionless_frequency(m, gap),
        frequency=lambda m: matsubara_frequency(m, gap.temperature_T),
        record_terms=per_term_log,
    )
    log_validity(
        model,
        matsubara_frequency(1, gap.temperature_T),
        matsubara_frequency(outcome.n_terms, gap.temperature_T),
    )
    return outcome


@typechecked
def casimir_pressure(
    gap: GapConfig,
    model: DielectricModel,
    policy: ZeroModePolicy = ZeroModePolicy.MODEL_DEFAULT,
    settings: NumericsSettings = NumericsSettings(),
    per_term_log: bool = False,
) -> PressureResult:
    """
    P = −(k_B T / (π a³)) [zero_mode_term + Σ_{m≥1} matsubara_term(m)].
    """
    outcome = _matsubara_sum(gap, model, policy, settings, Quantity.PRESSURE, per_term_log)
    prefactor = CONSTANTS.k_boltzmann * gap.temperature_T / (math.pi * gap.separation_a**3)
    return PressureResult(
        gap=gap,
        pressure=-prefactor * outcome.total,
        n_terms=outcome.n_terms,
        highest_frequency=matsubara_frequency(outcome.n_terms, gap.temperature_T),
        per_term_log=outcome.terms,
    )


@typechecked
def free_energy(
    gap: GapConfig,
    model: DielectricModel,
    policy: ZeroModePolicy = ZeroModePolicy.MODEL_DEFAULT,
    settings: NumericsSettings = NumericsSettings(),
    per_term_log: bool = False,
) -> FreeEnergyResult:
    """
    F = (k_B T / (2π a²)) Σ′_{m≥0} ∫_{q_m}^{y_max} y Σ_pol ln(1 − Δ² e^{−2y}) dy, in J/m².
    """
    outcome = _matsubara_sum(gap, model, policy, settings, Quantity.FREE_ENERGY, per_term_log)
    prefactor = CONSTANTS.k_boltzmann * gap.temperature_T / (2.0 * math.pi * gap.separation_a**2)
    return FreeEnergyResult(
        gap=gap,
        free_energy=prefactor * outcome.total,
        n_terms=outcome.n_terms,
        highest_frequency=matsubara_frequency(outcome.n_terms, gap.temperature_T),
        per_term_log=outcome.terms,
    )


def free_energy_per_area(
    gap: GapConfig,
    model: DielectricModel,
    policy: ZeroModePolicy = ZeroModePolicy.MODEL_DEFAULT,
    settings: NumericsSettings = NumericsSettings(),
) -> float:
    return free_energy(gap, model, policy, settings).free_energy
