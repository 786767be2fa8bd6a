import math
from enum import Enum

import numpy as np

from ..errors import AxisMismatchError, FrequencyError, OutOfRangeError
from .table import PermittivityTable, TableAxis


class Extrapolation(Enum):
    ERROR = "error"
    DRUDE = "drude"


def _drude_continuation(zeta: float, anchor_zeta: float, anchor_eps: float, nu: float) -> float:
    # one-parameter Drude form through the endpoint: ε−1 = W / (ζ(ζ+ν))
    weight = (anchor_eps - 1.0) * anchor_zeta * (anchor_zeta + nu)
    return 1.0 + weight / (zeta * (zeta + nu))


def interpolate_imaginary_axis(
    table: PermittivityTable,
    zeta: float,
    extrapolation: Extrapolation = Extrapolation.ERROR,
    nu: float = 0.0,
) -> float:
    """
    Log-log piecewise-linear interpolation of ε(iζ) − 1.

    Grid points return the stored value exactly. Outside the grid, ERROR raises and
    DRUDE continues with ε − 1 = W/(ζ(ζ+ν)) matched at the nearest endpoint.
    """
    if table.axis is not TableAxis.IMAGINARY:
        raise AxisMismatchError(f"interpolation needs an imaginary-axis table, got axis '{table.axis.value}'")
    if not zeta > 0.0:
        raise FrequencyError(f"zeta must be > 0 rad/s, got {zeta}")

    if zeta < table.lower or zeta > table.upper:
        if extrapolation is Extrapolation.ERROR:
            raise OutOfRangeError(zeta, table.lower, table.upper)
        if zeta < table.lower:
            return _drude_continuation(zeta, table.lower, table.values[0], nu)
        return _drude_continuation(zeta, table.upper, table.values[-1], nu)

    omega = table.omega_array
    index = int(np.searchsorted(omega, zeta))
    if omega[index] == zeta:
        return table.values[index]

    w0, w1 = table.omega[index - 1], table.omega[index]
    e0, e1 = table.values[index - 1] - 1.0, table.values[index] - 1.0
    t = math.log(zeta / w0) / math.log(w1 / w0)
    if e0 <= 0.0 or e1 <= 0.0:
        return 1.0 + e0 + t * (e1 - e0)
    return 1.0 + math.exp(math.log(e0) + t * (math.log(e1) - math.log(e0)))
