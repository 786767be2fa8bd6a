import math
from enum import Enum

from pydantic import BaseModel, ConfigDict

from ..physics import CONSTANTS
from .models import DielectricModel, Drude, Plasma, Vacuum


class ZeroModePolicy(Enum):
    MODEL_DEFAULT = "default"
    FORCE_TM_ONLY = "tm-only"
    FORCE_TM_AND_TE = "tm-te"


class TeZeroMode(Enum):
    NONE = "none"
    PLASMA = "plasma"
    UNIT = "unit"


def plasma_te_zero_reflection_sq(y: float, omega_p: float, separation_a: float) -> float:
    """
    Δ_TE(y)² at ζ = 0 for the plasma model, with Ω = ω_p a / c.
    """
    big_omega = omega_p * separation_a / CONSTANTS.c
    root = math.sqrt(y * y + big_omega * big_omega)
    delta = (root - y) / (root + y)
    return delta * delta


class ZeroModeContent(BaseModel):
    """
    Reflection content of the m = 0 term: TM squared reflection, and how the TE
    squared reflection depends on y.
    """

    model_config = ConfigDict(frozen=True)
    tm_sq: float
    te: TeZeroMode
    omega_p: float | None = None

    def te_sq(self, y: float, separation_a: float) -> float:
        match self.te:
            case TeZeroMode.NONE:
                return 0.0
            case TeZeroMode.UNIT:
                return 1.0
            case TeZeroMode.PLASMA:
                if self.omega_p is None:
                    raise ValueError("plasma TE zero mode needs omega_p")
                return plasma_te_zero_reflection_sq(y, self.omega_p, separation_a)


def zero_mode_reflections(
    model: DielectricModel, policy: ZeroModePolicy = ZeroModePolicy.MODEL_DEFAULT
) -> ZeroModeContent:
    """
    Resolves the m = 0 reflections for a model under a zero-mode policy.

    Forcing TE on a model with a plasma frequency uses the plasma closed form;
    otherwise the forced TE zero mode reflects perfectly. Vacuum never reflects.
    """
    if isinstance(model, Vacuum):
        return ZeroModeContent(tm_sq=0.0, te=TeZeroMode.NONE)

    omega_p = model.omega_p if isinstance(model, (Drude, Plasma)) else None
    match policy:
        case ZeroModePolicy.FORCE_TM_ONLY:
            return ZeroModeContent(tm_sq=1.0, te=TeZeroMode.NONE)
        case ZeroModePolicy.FORCE_TM_AND_TE:
            if omega_p is not None:
                return ZeroModeContent(tm_sq=1.0, te=TeZeroMode.PLASMA, omega_p=omega_p)
            return ZeroModeContent(tm_sq=1.0, te=TeZeroMode.UNIT)
        case ZeroModePolicy.MODEL_DEFAULT:
            match model.kind:
                case "plasma":
                    return ZeroModeContent(tm_sq=1.0, te=TeZeroMode.PLASMA, omega_p=omega_p)
                case "ideal":
                    return ZeroModeContent(tm_sq=1.0, te=TeZeroMode.UNIT)
                case _:
                    return ZeroModeContent(tm_sq=1.0, te=TeZeroMode.NONE)
