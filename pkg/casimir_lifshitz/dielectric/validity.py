import logging
from collections.abc import Iterator
from contextlib import contextmanager
from contextvars import ContextVar

from .models import DielectricModel, Tabulated

logger = logging.getLogger(__name__)

# optical data follow the Drude form only up to here
DRUDE_UPPER_VALIDITY = 2e15
# relaxation cannot be neglected below here
PLASMA_LOWER_VALIDITY = 5e13

# (model, finding code) pairs already logged in the active run
_reported: ContextVar[set[tuple[DielectricModel, str]] | None] = ContextVar("validity_reported", default=None)


def _findings(model: DielectricModel, zeta_min: float, zeta_max: float) -> list[tuple[str, str]]:
    findings: list[tuple[str, str]] = []
    match model.kind:
        case "drude":
            if zeta_max > DRUDE_UPPER_VALIDITY:
                findings.append((
                    "drude-high",
                    f"Drude model used up to {zeta_max:.3e} rad/s; real metals follow it only up to ~{DRUDE_UPPER_VALIDITY:.0e} rad/s",
                ))
        case "plasma":
            if zeta_min < PLASMA_LOWER_VALIDITY:
                findings.append((
                    "plasma-low",
                    f"plasma model used down to {zeta_min:.3e} rad/s; it fails below ~{PLASMA_LOWER_VALIDITY:.0e} rad/s where relaxation matters",
                ))
            if zeta_max > DRUDE_UPPER_VALIDITY:
                findings.append((
                    "plasma-high",
                    f"plasma model used up to {zeta_max:.3e} rad/s; interband absorption dominates above ~{DRUDE_UPPER_VALIDITY:.0e} rad/s",
                ))
        case "tabulated":
            assert isinstance(model, Tabulated)
            if zeta_min < model.table.lower or zeta_max > model.table.upper:
                findings.append((
                    "table-range",
                    f"Matsubara frequencies [{zeta_min:.3e}, {zeta_max:.3e}] rad/s leave the table range "
                    f"[{model.table.lower:.3e}, {model.table.upper:.3e}] rad/s",
                ))
    return findings


def validity_range_diagnostic(model: DielectricModel, zeta_min: float, zeta_max: float) -> list[str]:
    """
    Lists where the Matsubara frequencies [zeta_min, zeta_max] leave the range the
    model describes real metals in. Empty when nothing is out of range.
    """
    return [message for _, message in _findings(model, zeta_min, zeta_max)]


@contextmanager
def validity_warnings_once() -> Iterator[None]:
    """
    Within the block each finding is logged once per model, however many sums run.
    """
    token = _reported.set(set())
    try:
        yield
    finally:
        _reported.reset(token)


def log_validity(model: DielectricModel, zeta_min: float, zeta_max: float) -> None:
    reported = _reported.get()
    for code, message in _findings(model, zeta_min, zeta_max):
        if reported is not None:
            if (model, code) in reported:
                continue
            reported.add((model, code))
        logger.warning(message)
