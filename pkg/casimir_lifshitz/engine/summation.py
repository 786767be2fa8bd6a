import logging
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from itertools import count

from pydantic import BaseModel, ConfigDict

from ..errors import TruncationError
from ..numerics import NeumaierSum
from .settings import NumericsSettings, TruncationReference

logger = logging.getLogger(__name__)


class TermRecord(BaseModel):
    model_config = ConfigDict(frozen=True)
    m: int
    zeta: float
    term: float


class MatsubaraSum(BaseModel):
    """
    Outcome of a truncated Σ′ over Matsubara indices; n_terms counts m ≥ 1 only.
    """

    model_config = ConfigDict(frozen=True)
    total: float
    n_terms: int
    terms: tuple[TermRecord, ...] | None = None


@contextmanager
def _term_stream(term: Callable[[int], float], settings: NumericsSettings) -> Iterator[Iterator[float]]:
    if settings.workers == 1:
        yield map(term, count(1))
        return

    batch = settings.chunk_size * settings.workers

    def batched(executor: ProcessPoolExecutor) -> Iterator[float]:
        for start in count(1, batch):
            # map keeps index order, so accumulation order is independent of scheduling
            yield from executor.map(term, range(start, start + batch), chunksize=settings.chunk_size)

    with ProcessPoolExecutor(max_workers=settings.workers) as executor:
        yield batched(executor)


def truncated_matsubara_sum(
    term: Callable[[int], float],
    zero_term: float,
    settings: NumericsSettings,
    dimensionless: Callable[[int], float],
    frequency: Callable[[int], float],
    record_terms: bool = False,
) -> MatsubaraSum:
    """
    Accumulates zero_term + Σ_{m≥1} term(m) in ascending m with compensated summation.

    Stops at the m where consecutive_below successive terms are small relative to the
    truncation reference. `term` must be picklable when settings.workers > 1.
    """
    total = NeumaierSum(zero_term)
    leading = abs(zero_term)
    below = 0
    records: list[TermRecord] = []
    q_limit = settings.y_max + settings.y_margin

    with _term_stream(term, settings) as values:
        for m, value in zip(count(1), values):
            total.add(value)
            if record_terms:
                records.append(TermRecord(m=m, zeta=frequency(m), term=value))
            leading = max(leading, abs(value))
            if settings.truncation_reference is TruncationReference.LEADING_TERM:
                reference = leading
            else:
                reference = abs(total.value)

            if abs(value) <= settings.sum_tol * reference:
                below += 1
            else:
                below = 0
            if below >= settings.consecutive_below:
                logger.debug(f"Matsubara sum truncated at m={m} (q={dimensionless(m):.4g}), total={total.value:.12e}")
                return MatsubaraSum(
                    total=total.value,
                    n_terms=m,
                    terms=tuple(records) if record_terms else None,
                )
            if dimensionless(m) > q_limit:
                raise TruncationError(
                    f"Matsubara sum did not reach relative tolerance {settings.sum_tol} before "
                    f"q_m={dimensionless(m):.4g} > y_max + margin = {q_limit:.4g}; tolerances are inconsistent"
                )
    raise TruncationError("Matsubara term stream ended unexpectedly")
