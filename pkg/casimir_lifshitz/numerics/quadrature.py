import logging
import warnings
from typing import Callable, Sequence

from scipy.integrate import IntegrationWarning, quad

logger = logging.getLogger(__name__)


def adaptive_quad(
    func: Callable[[float], float],
    lower: float,
    upper: float,
    rel_tol: float,
    abs_tol: float,
    breakpoints: Sequence[float] = (),
    limit: int = 200,
) -> float:
    """
    Adaptive Gauss-Kronrod (21-point QUADPACK) integration of func over [lower, upper].

    Interior breakpoints seed the first subdivision. QUADPACK's roundoff warnings are
    expected near 1e-12 relative tolerance and are logged rather than raised.
    """
    if upper <= lower:
        return 0.0
    points = [p for p in breakpoints if lower < p < upper]
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", IntegrationWarning)
        value, error = quad(
            func,
            lower,
            upper,
            epsabs=abs_tol,
            epsrel=rel_tol,
            limit=limit,
            points=points or None,
        )
    for warning in caught:
        logger.debug(f"quad on [{lower:.6g}, {upper:.6g}]: {warning.message} (error estimate {error:.3e})")
    return value
