import math

import pytest

from casimir_lifshitz.dielectric import (
    Drude,
    IdealMetal,
    ModifiedIdealMetal,
    Plasma,
    Vacuum,
    ZeroModePolicy,
)
from casimir_lifshitz.engine import (
    ZERO_MODE_PRESSURE,
    ZETA_3,
    NumericsSettings,
    casimir_pressure,
    free_energy,
    free_energy_per_area,
    matsubara_term,
    zero_mode_free_energy_term,
    zero_mode_term,
)
from casimir_lifshitz.errors import RegimeError
from casimir_lifshitz.physics import CONSTANTS, GapConfig, matsubara_frequency
from casimir_lifshitz.thermodynamics import classical_limit_pressure
from tests import Param, parametrise

ROOM = GapConfig.from_nm(1000.0, 300.0)


def test_zero_mode_terms():
    assert zero_mode_term(ROOM, Drude()) == ZERO_MODE_PRESSURE
    assert zero_mode_term(ROOM, IdealMetal()) == 2.0 * ZERO_MODE_PRESSURE
    assert zero_mode_term(ROOM, ModifiedIdealMetal()) == ZERO_MODE_PRESSURE
    assert zero_mode_term(ROOM, Vacuum()) == 0.0
    assert zero_mode_term(ROOM, Drude(), ZeroModePolicy.FORCE_TM_AND_TE) == zero_mode_term(ROOM, Plasma())
    assert zero_mode_free_energy_term(ROOM, IdealMetal()) == pytest.approx(-ZETA_3 / 4.0)


def test_plasma_te_zero_mode_is_partial():
    te = zero_mode_term(ROOM, Plasma()) - ZERO_MODE_PRESSURE
    assert 0.0 < te < ZERO_MODE_PRESSURE


def test_matsubara_term_needs_positive_index():
    with pytest.raises(ValueError, match="m >= 1"):
        matsubara_term(0, ROOM, Drude(), NumericsSettings())


def test_matsubara_term_vanishes_beyond_y_max():
    # q_m = 0.82 m at 1 µm, 300 K
    assert matsubara_term(40, ROOM, IdealMetal(), NumericsSettings()) == 0.0


def test_vacuum_has_no_force():
    result = casimir_pressure(ROOM, Vacuum())
    assert result.pressure == 0.0
    assert free_energy_per_area(ROOM, Vacuum()) == 0.0


attraction_data = [
    Param([Drude()], "drude"),
    Param([Plasma()], "plasma"),
    Param([IdealMetal()], "ideal"),
    Param([ModifiedIdealMetal()], "mim"),
]


@parametrise(attraction_data)
def test_pressure_is_attractive(model):
    result = casimir_pressure(ROOM, model)
    assert result.pressure < 0.0
    assert free_energy_per_area(ROOM, model) < 0.0


def test_highest_frequency_is_last_index_times_first():
    result = casimir_pressure(ROOM, Drude())
    assert result.highest_frequency == matsubara_frequency(result.n_terms, 300.0)
    assert result.highest_frequency == result.n_terms * matsubara_frequency(1, 300.0)


def test_mim_differs_from_ideal_by_te_zero_mode():
    ideal = casimir_pressure(ROOM, IdealMetal())
    mim = casimir_pressure(ROOM, ModifiedIdealMetal())
    prefactor = CONSTANTS.k_boltzmann * 300.0 / (math.pi * 1e-18)
    assert mim.n_terms == ideal.n_terms
    assert mim.pressure - ideal.pressure == pytest.approx(prefactor * ZERO_MODE_PRESSURE, rel=1e-9)


def test_per_term_log_reproduces_pressure():
    result = casimir_pressure(ROOM, Drude(), per_term_log=True)
    assert result.per_term_log is not None
    assert len(result.per_term_log) == result.n_terms
    total = ZERO_MODE_PRESSURE + math.fsum(record.term for record in result.per_term_log)
    prefactor = CONSTANTS.k_boltzmann * 300.0 / (math.pi * 1e-18)
    assert result.pressure == pytest.approx(-prefactor * total, rel=1e-12)


def test_pressure_is_minus_free_energy_derivative():
    a = 1e-6
    h = 1e-3 * a
    upper = free_energy_per_area(GapConfig(separation_a=a + h, temperature_T=300.0), Drude())
    lower = free_energy_per_area(GapConfig(separation_a=a - h, temperature_T=300.0), Drude())
    direct = casimir_pressure(GapConfig(separation_a=a, temperature_T=300.0), Drude()).pressure
    assert -(upper - lower) / (2.0 * h) == pytest.approx(direct, rel=5e-3)


def test_free_energy_result_diagnostics():
    result = free_energy(ROOM, Drude())
    assert result.n_terms > 0
    assert result.highest_frequency == matsubara_frequency(result.n_terms, 300.0)


classical_data = [
    Param([Drude(), ZeroModePolicy.FORCE_TM_ONLY], "drude"),
    Param([IdealMetal(), ZeroModePolicy.FORCE_TM_AND_TE], "ideal"),
]


@parametrise(classical_data)
def test_classical_limit(model, policy: ZeroModePolicy):
    gap = GapConfig(separation_a=10e-6, temperature_T=300.0)
    limit = classical_limit_pressure(gap.separation_a, 300.0, policy)
    assert casimir_pressure(gap, model).pressure == pytest.approx(limit, rel=2e-2)


def test_classical_factor_of_two():
    gap = GapConfig(separation_a=5e-6, temperature_T=300.0)
    drude = casimir_pressure(gap, Drude()).pressure
    ideal = casimir_pressure(gap, IdealMetal()).pressure
    assert drude == pytest.approx(classical_limit_pressure(5e-6, 300.0, ZeroModePolicy.FORCE_TM_ONLY), rel=5e-2)
    assert ideal == pytest.approx(classical_limit_pressure(5e-6, 300.0, ZeroModePolicy.FORCE_TM_AND_TE), rel=5e-2)
    assert drude / ideal == pytest.approx(0.5, rel=2e-2)


regime_data = [
    Param([GapConfig(separation_a=5e-10, temperature_T=300.0)], "separation"),
    Param([GapConfig(separation_a=1e-6, temperature_T=1e-3)], "temperature"),
]


@parametrise(regime_data)
def test_outside_validated_regime(gap: GapConfig):
    with pytest.raises(RegimeError):
        casimir_pressure(gap, Drude())


def test_worker_processes_are_bitwise_identical():
    serial = casimir_pressure(ROOM, Drude())
    parallel = casimir_pressure(ROOM, Drude(), settings=NumericsSettings(workers=2, chunk_size=4))
    assert parallel.pressure == serial.pressure
    assert parallel.n_terms == serial.n_terms


def test_validity_warning_logged(caplog):
    casimir_pressure(GapConfig.from_nm(160.0, 300.0), Drude())
    assert "Drude model used up to" in caplog.text


ROOM_GRID_NM = (160.0, 200.0, 250.0, 400.0, 500.0, 700.0, 1000.0)


def test_model_ordering_and_decay_over_room_temperature_grid():
    magnitudes = {
        model.kind: [abs(casimir_pressure(GapConfig.from_nm(a, 300.0), model).pressure) for a in ROOM_GRID_NM]
        for model in (IdealMetal(), Plasma(), Drude())
    }
    for ideal, plasma, drude in zip(magnitudes["ideal"], magnitudes["plasma"], magnitudes["drude"]):
        assert ideal >= plasma >= drude > 0.0
    for values in magnitudes.values():
        assert all(far < near for near, far in zip(values, values[1:]))


def test_vanishing_relaxation_keeps_te_zero_mode_gap():
    # ν → 0⁺ does not reach the plasma pressure: the plasma TE zero mode stays missing
    plasma = Plasma()
    nearly_plasma = Drude(omega_p=plasma.omega_p, nu=1e-7 * plasma.omega_p)
    gap = casimir_pressure(ROOM, nearly_plasma).pressure - casimir_pressure(ROOM, plasma).pressure
    te_zero_mode = (
        casimir_pressure(ROOM, plasma, ZeroModePolicy.FORCE_TM_ONLY).pressure - casimir_pressure(ROOM, plasma).pressure
    )
    assert te_zero_mode > 0.0
    assert gap == pytest.approx(te_zero_mode, rel=1e-2)
