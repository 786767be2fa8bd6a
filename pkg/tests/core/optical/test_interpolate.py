import numpy as np
import pytest

from casimir_lifshitz.errors import AxisMismatchError, FrequencyError, OutOfRangeError
from casimir_lifshitz.optical import Extrapolation, PermittivityTable, TableAxis, interpolate_imaginary_axis
from tests import Param, parametrise

OMEGA_P = 1.37e16
NU = 5.32e13


def _drude(zeta: float) -> float:
    return 1.0 + OMEGA_P**2 / (zeta * (zeta + NU))


@pytest.fixture(scope="module")
def drude_table() -> PermittivityTable:
    grid = np.logspace(11, 17, 121)
    return PermittivityTable(
        axis=TableAxis.IMAGINARY,
        omega=tuple(float(z) for z in grid),
        values=tuple(_drude(float(z)) for z in grid),
    )


def test_grid_points_are_exact(drude_table: PermittivityTable):
    for index in (0, 7, 60, 120):
        zeta = drude_table.omega[index]
        assert interpolate_imaginary_axis(drude_table, zeta) == drude_table.values[index]


def test_between_grid_points(drude_table: PermittivityTable):
    omega = drude_table.omega
    for index in range(0, 120, 11):
        zeta = (omega[index] * omega[index + 1]) ** 0.5
        assert interpolate_imaginary_axis(drude_table, zeta) == pytest.approx(_drude(zeta), rel=1e-3)


out_of_range_data = [
    Param([1e10], "below"),
    Param([1e18], "above"),
]


@parametrise(out_of_range_data)
def test_out_of_range_raises(zeta: float):
    table = PermittivityTable(
        axis=TableAxis.IMAGINARY, omega=tuple(np.logspace(11, 17, 8)), values=tuple(np.linspace(100.0, 2.0, 8))
    )
    with pytest.raises(OutOfRangeError):
        interpolate_imaginary_axis(table, zeta)


@parametrise(out_of_range_data)
def test_drude_continuation_matches_drude(zeta: float):
    grid = np.logspace(11, 17, 61)
    table = PermittivityTable(
        axis=TableAxis.IMAGINARY,
        omega=tuple(float(z) for z in grid),
        values=tuple(_drude(float(z)) for z in grid),
    )
    value = interpolate_imaginary_axis(table, zeta, Extrapolation.DRUDE, NU)
    assert value == pytest.approx(_drude(zeta), rel=1e-9)


def test_linear_fallback_when_excess_vanishes():
    table = PermittivityTable(
        axis=TableAxis.IMAGINARY,
        omega=(1.0, 10.0, 100.0, 1000.0, 1e4, 1e5, 1e6, 1e7),
        values=(3.0, 2.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0),
    )
    assert interpolate_imaginary_axis(table, 10.0**1.5) == pytest.approx(1.5)


def test_interpolation_needs_imaginary_axis():
    table = PermittivityTable(axis=TableAxis.REAL_LOSS, omega=tuple(np.logspace(11, 17, 8)), values=(1.0,) * 8)
    with pytest.raises(AxisMismatchError):
        interpolate_imaginary_axis(table, 1e14)


def test_interpolation_needs_positive_frequency(drude_table: PermittivityTable):
    with pytest.raises(FrequencyError):
        interpolate_imaginary_axis(drude_table, -1.0)
