import math
from dataclasses import dataclass

from ..dielectric import InfinitePermittivity, Permittivity


@dataclass(frozen=True, slots=True)
class ReflectionPair:
    delta_tm_sq: float
    delta_te_sq: float


PERFECT = ReflectionPair(1.0, 1.0)
NONE = ReflectionPair(0.0, 0.0)


def reflection_coefficients(eps: Permittivity, y: float, q: float) -> ReflectionPair:
    """
    Squared Fresnel coefficients on the imaginary axis in the variable y ≥ q.

    With s = √(y² + (ε−1)q²): Δ_TE = (s−y)/(s+y), Δ_TM = (εy−s)/(εy+s). Both are
    evaluated in units of y, so tiny y neither underflows nor divides by zero.
    """
    if y < q or q < 0.0:
        raise ValueError(f"reflection needs y >= q >= 0, got y={y}, q={q}")
    if isinstance(eps, InfinitePermittivity):
        return PERFECT
    if eps == 1.0:
        return NONE
    if y == 0.0:
        tm = (eps - 1.0) / (eps + 1.0)
        return ReflectionPair(tm * tm, 0.0)
    # k = (ε−1)(q/y)², root = s/y
    ratio = q / y
    k = (eps - 1.0) * ratio * ratio
    root = math.sqrt(1.0 + k)
    # (root − 1)/(root + 1) written as k/(root + 1)² to avoid cancellation when k << 1
    te = k / ((root + 1.0) * (root + 1.0))
    tm = (eps - root) / (eps + root)
    return ReflectionPair(tm * tm, te * te)


def _mode_weight(delta_sq: float, decay: float, one_minus: float) -> float:
    # Δ² e^{-2y} / (1 − Δ² e^{-2y}) == (e^{2y}/Δ² − 1)^{-1}
    if delta_sq == 0.0:
        return 0.0
    if delta_sq == 1.0:
        return decay / one_minus
    return delta_sq * decay / (1.0 - delta_sq * decay)


def pressure_integrand(pair: ReflectionPair, y: float) -> float:
    """
    y² [(e^{2y}/Δ_TM² − 1)⁻¹ + (e^{2y}/Δ_TE² − 1)⁻¹]
    """
    if y <= 0.0:
        return 0.0
    decay = math.exp(-2.0 * y)
    one_minus = -math.expm1(-2.0 * y)
    return y * y * (
        _mode_weight(pair.delta_tm_sq, decay, one_minus) + _mode_weight(pair.delta_te_sq, decay, one_minus)
    )


def _log_weight(delta_sq: float, decay: float, y: float) -> float:
    if delta_sq == 0.0:
        return 0.0
    if delta_sq == 1.0:
        return math.log(-math.expm1(-2.0 * y))
    return math.log1p(-delta_sq * decay)


def free_energy_integrand(pair: ReflectionPair, y: float) -> float:
    """
    y [ln(1 − Δ_TM² e^{−2y}) + ln(1 − Δ_TE² e^{−2y})]
    """
    if y <= 0.0:
        return 0.0
    decay = math.exp(-2.0 * y)
    return y * (_log_weight(pair.delta_tm_sq, decay, y) + _log_weight(pair.delta_te_sq, decay, y))
