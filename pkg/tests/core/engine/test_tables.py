from functools import lru_cache

import pytest

from casimir_lifshitz.cli import load_reference_table
from casimir_lifshitz.dielectric import Drude, IdealMetal
from casimir_lifshitz.engine import NumericsSettings, casimir_pressure
from casimir_lifshitz.physics import MPA, GapConfig, matsubara_frequency
from casimir_lifshitz.thermodynamics import ideal_pressure_zero_T


def _rows(name: str) -> list[tuple[float, float, int]]:
    table = load_reference_table(name)
    return list(zip(table.column("separation_nm"), table.column("pressure_mPa"), table.column("n_terms")))


def _check_row(separation_nm: float, temperature: float, printed_mpa: float, printed_terms: float):
    result = casimir_pressure(GapConfig.from_nm(separation_nm, temperature), Drude())
    assert abs(result.pressure) / MPA == pytest.approx(printed_mpa, rel=5e-2)
    assert result.n_terms == pytest.approx(printed_terms, rel=0.2)
    assert result.highest_frequency == result.n_terms * matsubara_frequency(1, temperature)


@pytest.mark.parametrize("separation_nm,printed_mpa,printed_terms", _rows("table3"))
def test_room_temperature_table(separation_nm: float, printed_mpa: float, printed_terms: float):
    _check_row(separation_nm, 300.0, printed_mpa, printed_terms)


@pytest.mark.parametrize("separation_nm,printed_mpa,printed_terms", _rows("table4"))
def test_350_kelvin_table(separation_nm: float, printed_mpa: float, printed_terms: float):
    _check_row(separation_nm, 350.0, printed_mpa, printed_terms)


@pytest.mark.slow
@pytest.mark.parametrize("separation_nm,printed_mpa,printed_terms", _rows("table2"))
def test_one_kelvin_table(separation_nm: float, printed_mpa: float, printed_terms: float):
    _check_row(separation_nm, 1.0, printed_mpa, printed_terms)


@pytest.mark.slow
@pytest.mark.parametrize("separation_nm", [500.0, 1000.0])
def test_ideal_metal_zero_temperature_limit(separation_nm: float):
    gap = GapConfig.from_nm(separation_nm, 1.0)
    pressure = casimir_pressure(gap, IdealMetal()).pressure
    assert pressure == pytest.approx(ideal_pressure_zero_T(gap.separation_a), rel=5e-3)


def test_temperature_signal_at_one_micron():
    cold = casimir_pressure(GapConfig.from_nm(1000.0, 300.0), Drude()).pressure
    warm = casimir_pressure(GapConfig.from_nm(1000.0, 350.0), Drude()).pressure
    assert warm / cold == pytest.approx(0.9590 / 0.9852, rel=2e-2)


def test_one_nanometre_sensitivity_at_200_nm():
    near = casimir_pressure(GapConfig.from_nm(200.0, 300.0), Drude()).pressure
    far = casimir_pressure(GapConfig.from_nm(201.0, 300.0), Drude()).pressure
    assert 7.0 <= abs(far - near) / MPA <= 13.0


@lru_cache(maxsize=None)
def _room_temperature_pressure(separation_nm: float) -> float:
    return casimir_pressure(GapConfig.from_nm(separation_nm, 300.0), Drude()).pressure


@pytest.mark.parametrize("separation_nm", [row[0] for row in _rows("table3")])
@pytest.mark.parametrize(
    "overrides",
    [{"sum_tol": 0.5e-8}, {"integral_tol": 0.5e-12}, {"y_max": 40.0}],
    ids=["half sum_tol", "half integral_tol", "y_max 40"],
)
def test_tightening_numerics_is_stable(overrides: dict, separation_nm: float):
    gap = GapConfig.from_nm(separation_nm, 300.0)
    baseline = _room_temperature_pressure(separation_nm)
    tightened = casimir_pressure(gap, Drude(), settings=NumericsSettings().with_overrides(**overrides)).pressure
    assert tightened == pytest.approx(baseline, rel=1e-6)
