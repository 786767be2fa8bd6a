import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from casimir_lifshitz.dielectric import INFINITE
from casimir_lifshitz.engine import (
    ZERO_MODE_FREE_ENERGY,
    ZERO_MODE_PRESSURE,
    ReflectionPair,
    free_energy_integrand,
    pressure_integrand,
    reflection_coefficients,
)
from casimir_lifshitz.numerics import adaptive_quad
from tests import Param, parametrise


def test_infinite_permittivity_reflects_perfectly():
    assert reflection_coefficients(INFINITE, 2.0, 1.0) == ReflectionPair(1.0, 1.0)


def test_vacuum_does_not_reflect():
    assert reflection_coefficients(1.0, 2.0, 1.0) == ReflectionPair(0.0, 0.0)


def test_normal_incidence_limit():
    pair = reflection_coefficients(4.0, 1.0, 0.0)
    assert pair.delta_te_sq == 0.0
    assert pair.delta_tm_sq == pytest.approx((3.0 / 5.0) ** 2)


def test_known_values():
    # ε = 4, y = q = 1: s = 2, Δ_TE = 1/3, Δ_TM = (4 − 2)/(4 + 2) = 1/3
    pair = reflection_coefficients(4.0, 1.0, 1.0)
    assert pair.delta_te_sq == pytest.approx(1.0 / 9.0)
    assert pair.delta_tm_sq == pytest.approx(1.0 / 9.0)


def test_y_below_q_rejected():
    with pytest.raises(ValueError, match="y >= q"):
        reflection_coefficients(4.0, 0.5, 1.0)


@settings(max_examples=200, deadline=None)
@given(
    eps=st.floats(min_value=1.0, max_value=1e8),
    q=st.floats(min_value=0.0, max_value=30.0),
    dy=st.floats(min_value=0.0, max_value=30.0),
)
def test_squared_reflections_in_unit_interval(eps: float, q: float, dy: float):
    pair = reflection_coefficients(eps, q + dy, q)
    assert 0.0 <= pair.delta_te_sq <= 1.0
    assert 0.0 <= pair.delta_tm_sq <= 1.0


def test_pressure_integrand_perfect_reflection():
    y = 1.3
    assert pressure_integrand(ReflectionPair(1.0, 1.0), y) == pytest.approx(2.0 * y * y / math.expm1(2.0 * y))
    assert pressure_integrand(ReflectionPair(0.0, 0.0), y) == 0.0
    assert pressure_integrand(ReflectionPair(1.0, 1.0), 0.0) == 0.0


def test_free_energy_integrand_perfect_reflection():
    assert free_energy_integrand(ReflectionPair(1.0, 1.0), 1.0) == pytest.approx(2.0 * math.log(1.0 - math.exp(-2.0)))


def test_zero_mode_closed_forms():
    pressure = 0.5 * adaptive_quad(
        lambda y: pressure_integrand(ReflectionPair(1.0, 0.0), y), 0.0, 30.0, rel_tol=1e-12, abs_tol=1e-30
    )
    energy = 0.5 * adaptive_quad(
        lambda y: free_energy_integrand(ReflectionPair(1.0, 0.0), y), 0.0, 30.0, rel_tol=1e-12, abs_tol=1e-30
    )
    assert pressure == pytest.approx(ZERO_MODE_PRESSURE, rel=1e-9)
    assert energy == pytest.approx(ZERO_MODE_FREE_ENERGY, rel=1e-9)


tiny_y_data = [
    Param([1e-200, 0.0], "normal incidence"),
    Param([1e-200, 1e-200], "grazing"),
    Param([1e-160, 4e-161], "subnormal excess"),
]


@parametrise(tiny_y_data)
def test_tiny_y_matches_unit_scale(y: float, q: float):
    # the coefficients depend on q/y only
    assert reflection_coefficients(2.0, y, q) == reflection_coefficients(2.0, 1.0, q / y)


def test_tiny_y_values():
    pair = reflection_coefficients(4.0, 1e-200, 1e-200)
    assert pair.delta_te_sq == pytest.approx(1.0 / 9.0)
    assert pair.delta_tm_sq == pytest.approx(1.0 / 9.0)
