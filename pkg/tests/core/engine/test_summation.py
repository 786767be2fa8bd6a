from functools import partial

import pytest

from casimir_lifshitz.engine import NumericsSettings, TruncationReference, truncated_matsubara_sum
from casimir_lifshitz.errors import TruncationError
from tests import Param, parametrise

halving = partial(pow, 0.5)


def _q(m: int) -> float:
    return 0.01 * m


def _zeta(m: int) -> float:
    return 1e14 * m


truncation_data = [
    # 2^-27 is the first term <= 1e-8 * 1, the second in a row stops the sum
    Param([TruncationReference.LEADING_TERM, 2, 28], "leading term"),
    # against the running sum (~2) the first small term is 2^-26
    Param([TruncationReference.PARTIAL_SUM, 2, 27], "partial sum"),
    Param([TruncationReference.LEADING_TERM, 1, 27], "single small term"),
]


@parametrise(truncation_data)
def test_truncation_point(reference: TruncationReference, consecutive: int, n_terms: int):
    settings = NumericsSettings(sum_tol=1e-8, truncation_reference=reference, consecutive_below=consecutive)
    outcome = truncated_matsubara_sum(halving, 1.0, settings, _q, _zeta)
    assert outcome.n_terms == n_terms
    assert outcome.total == pytest.approx(2.0 - 0.5**n_terms, rel=1e-15)
    assert outcome.terms is None


def test_recorded_terms():
    outcome = truncated_matsubara_sum(halving, 1.0, NumericsSettings(), _q, _zeta, record_terms=True)
    assert outcome.terms is not None
    assert [record.m for record in outcome.terms] == list(range(1, outcome.n_terms + 1))
    assert outcome.terms[2].zeta == 3e14
    assert outcome.terms[2].term == 0.125


def test_exact_zeros_stop_the_sum():
    outcome = truncated_matsubara_sum(lambda m: 0.0, 0.0, NumericsSettings(), _q, _zeta)
    assert outcome.total == 0.0
    assert outcome.n_terms == 2


def test_truncation_error_past_y_max():
    with pytest.raises(TruncationError, match="y_max"):
        truncated_matsubara_sum(lambda m: 1.0, 1.0, NumericsSettings(y_max=30.0), lambda m: float(m), _zeta)


def test_worker_processes_give_identical_totals():
    serial = truncated_matsubara_sum(halving, 1.0, NumericsSettings(), _q, _zeta)
    parallel = truncated_matsubara_sum(halving, 1.0, NumericsSettings(workers=2, chunk_size=4), _q, _zeta)
    assert parallel.total == serial.total
    assert parallel.n_terms == serial.n_terms


def test_settings_overrides_are_validated():
    settings = NumericsSettings().with_overrides(y_max=40.0, sum_tol=None)
    assert settings.y_max == 40.0
    assert settings.sum_tol == 1e-8
    with pytest.raises(ValueError):
        NumericsSettings().with_overrides(y_max=-1.0)
