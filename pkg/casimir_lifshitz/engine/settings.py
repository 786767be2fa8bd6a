from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

# validated regime
MIN_SEPARATION = 1e-9
MIN_TEMPERATURE = 1e-2


class TruncationReference(Enum):
    LEADING_TERM = "leading_term"
    PARTIAL_SUM = "partial_sum"


class NumericsSettings(BaseModel):
    """
    Quadrature and Matsubara-sum controls.

    A term counts as small when |term| <= sum_tol * reference, where the reference
    is the largest |term| so far (leading_term) or the running sum (partial_sum);
    the sum stops after consecutive_below small terms in a row.
    """

    model_config = ConfigDict(frozen=True)
    y_max: float = Field(default=30.0, gt=0.0)
    integral_tol: float = Field(default=1e-12, gt=0.0)
    integral_abs_floor: float = Field(default=1e-30, gt=0.0)
    sum_tol: float = Field(default=1e-8, gt=0.0)
    consecutive_below: int = Field(default=2, ge=1)
    truncation_reference: TruncationReference = TruncationReference.LEADING_TERM
    y_margin: float = Field(default=1.0, ge=0.0)
    quad_limit: int = Field(default=200, ge=10)
    workers: int = Field(default=1, ge=1)
    chunk_size: int = Field(default=32, ge=1)

    def with_overrides(self, **overrides) -> "NumericsSettings":
        update = {k: v for k, v in overrides.items() if v is not None}
        return NumericsSettings.model_validate(self.model_dump() | update)
