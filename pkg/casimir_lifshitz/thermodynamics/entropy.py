import logging

from pydantic import BaseModel, ConfigDict, model_validator
from typeguard import typechecked

from ..dielectric import DielectricModel, ZeroModePolicy, validity_warnings_once
from ..engine import NumericsSettings, free_energy
from ..errors import RegimeError, StepUnderflowError
from ..physics import GapConfig

logger = logging.getLogger(__name__)

NERNST_STEP = 0.25
DEFAULT_STEP = 1.0
# below this temperature the finer step is used
NERNST_REGION = 4.0


def default_step(T: float, fine: float = NERNST_STEP, coarse: float = DEFAULT_STEP) -> float:
    return fine if T <= NERNST_REGION else coarse


class EntropyScan(BaseModel):
    model_config = ConfigDict(frozen=True)
    model: DielectricModel
    separation: float
    temperatures: tuple[float, ...]
    entropy: tuple[float, ...]

    @model_validator(mode="after")
    def _check_lengths(self) -> "EntropyScan":
        if len(self.temperatures) != len(self.entropy):
            raise ValueError("temperatures and entropy must have equal length")
        for low, high in zip(self.temperatures, self.temperatures[1:]):
            if not high > low:
                raise ValueError("temperatures must be strictly increasing")
        return self


@typechecked
def entropy_per_area(
    a: float,
    T: float,
    model: DielectricModel,
    policy: ZeroModePolicy = ZeroModePolicy.MODEL_DEFAULT,
    settings: NumericsSettings = NumericsSettings(),
    dT: float | None = None,
) -> float:
    """
    S = −∂F/∂T in J/(K·m²) by a central difference of the free energy.

    Raises StepUnderflowError when F(T ± dT) differ by less than the Matsubara-sum
    tolerance can resolve.
    """
    step = default_step(T) if dT is None else dT
    if not T - step > 0.0:
        raise RegimeError(f"entropy step dT={step} K must be smaller than T={T} K")
    upper = free_energy(GapConfig(separation_a=a, temperature_T=T + step), model, policy, settings).free_energy
    lower = free_energy(GapConfig(separation_a=a, temperature_T=T - step), model, policy, settings).free_energy
    difference = upper - lower
    resolution = settings.sum_tol * max(abs(upper), abs(lower))
    if abs(difference) < resolution:
        raise StepUnderflowError(
            f"free-energy change {difference:.3e} J/m^2 over dT={step} K at T={T} K is below the "
            f"sum-tolerance resolution {resolution:.3e} J/m^2; increase dT or tighten sum_tol"
        )
    entropy = -difference / (2.0 * step)
    logger.debug(f"S(a={a:.4e} m, T={T} K) = {entropy:.6e} J/(K m^2)")
    return entropy


def entropy_scan(
    a: float,
    temperatures: list[float],
    model: DielectricModel,
    policy: ZeroModePolicy = ZeroModePolicy.MODEL_DEFAULT,
    settings: NumericsSettings = NumericsSettings(),
    dT: float | None = None,
) -> EntropyScan:
    ordered = sorted(temperatures)
    with validity_warnings_once():
        values = [entropy_per_area(a, T, model, policy, settings, dT) for T in ordered]
    return EntropyScan(model=model, separation=a, temperatures=tuple(ordered), entropy=tuple(values))
