import math
from functools import lru_cache

import numpy as np
from scipy.interpolate import PchipInterpolator

from ..numerics import adaptive_quad
from ..errors import AxisMismatchError, FrequencyError
from .table import PermittivityTable, TableAxis

KK_TOLERANCE = 1e-8


@lru_cache(maxsize=32)
def _loss_interpolant(table: PermittivityTable) -> PchipInterpolator:
    # shape-preserving in u = ln ω, so the interpolated ε″ stays nonnegative
    return PchipInterpolator(np.log(table.omega_array), table.values_array, extrapolate=False)


def _low_tail(table: PermittivityTable, zeta: float) -> float:
    """
    ∫₀^{ω₀} ω ε″/(ω²+ζ²) dω with ε″ = ε″₀ ω₀/ω below the grid.
    """
    weight = table.values[0] * table.omega[0]
    return weight / zeta * math.atan(table.omega[0] / zeta)


def _high_tail(table: PermittivityTable, zeta: float) -> float:
    """
    ∫_{ω_N}^∞ ω ε″/(ω²+ζ²) dω with ε″ = ε″_N (ω_N/ω)³ above the grid.
    """
    omega_n = table.omega[-1]
    weight = table.values[-1] * omega_n**3
    x = zeta / omega_n
    if x < 1e-3:
        return weight / omega_n**3 * (1.0 / 3.0 - x * x / 5.0 + x**4 / 7.0)
    return weight / zeta**2 * (1.0 / omega_n - math.atan(x) / zeta)


def kramers_kronig_to_imaginary_axis(
    table: PermittivityTable, zeta: float, tolerance: float = KK_TOLERANCE
) -> float:
    """
    ε(iζ) = 1 + (2/π) ∫₀^∞ ω ε″(ω) / (ω² + ζ²) dω.

    The tabulated range is integrated adaptively in u = ln ω (split at u = ln ζ when
    it falls inside the grid); the 1/ω and 1/ω³ tails are added analytically.
    """
    if table.axis is not TableAxis.REAL_LOSS:
        raise AxisMismatchError(f"Kramers-Kronig needs a real_loss table, got axis '{table.axis.value}'")
    if not zeta > 0.0:
        raise FrequencyError(f"zeta must be > 0 rad/s, got {zeta}")

    interpolant = _loss_interpolant(table)
    zeta_sq = zeta * zeta

    def integrand(u: float) -> float:
        omega_sq = math.exp(2.0 * u)
        return omega_sq * float(interpolant(u)) / (omega_sq + zeta_sq)

    lower = math.log(table.omega[0])
    upper = math.log(table.omega[-1])
    split = math.log(zeta)
    breakpoints = (split,) if lower < split < upper else ()
    body = adaptive_quad(
        integrand,
        lower,
        upper,
        rel_tol=tolerance,
        abs_tol=tolerance,
        breakpoints=breakpoints,
        limit=max(4 * len(table), 200),
    )
    total = body + _low_tail(table, zeta) + _high_tail(table, zeta)
    return 1.0 + 2.0 / math.pi * max(total, 0.0)


def kramers_kronig_table(
    table: PermittivityTable, zeta_grid: "np.ndarray | list[float]", tolerance: float = KK_TOLERANCE
) -> PermittivityTable:
    """
    Transforms a real_loss table onto an imaginary-axis grid.
    """
    zetas = [float(z) for z in zeta_grid]
    values = [kramers_kronig_to_imaginary_axis(table, z, tolerance) for z in zetas]
    return PermittivityTable(
        axis=TableAxis.IMAGINARY,
        omega=tuple(zetas),
        values=tuple(values),
        provenance=f"kramers-kronig of {table.provenance}" if table.provenance else "kramers-kronig",
    )


def log_grid(lower: float, upper: float, points_per_decade: int) -> np.ndarray:
    decades = math.log10(upper / lower)
    n_points = max(math.ceil(round(decades * points_per_decade, 6)) + 1, 8)
    return np.logspace(math.log10(lower), math.log10(upper), n_points)
