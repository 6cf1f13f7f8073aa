# hermite_bezier/schemas/certificate.py
import math

from pydantic import BaseModel, ConfigDict, Field, field_validator

from hermite_bezier.core.config import settings


class SearchParams(BaseModel):
    M: float = Field(default_factory=lambda: settings.LEMMA_M, gt=0)
    r: float = Field(default_factory=lambda: settings.LEMMA_R)
    eps: float = Field(default_factory=lambda: settings.LEMMA_EPS, gt=0)
    step_floor: float = Field(default_factory=lambda: settings.LEMMA_STEP_FLOOR, gt=0)
    cap_step: float = Field(default_factory=lambda: settings.LEMMA_CAP_STEP, gt=0)
    threads: int = Field(default=1, ge=1)

    model_config = ConfigDict(frozen=True)

    @field_validator("r")
    @classmethod
    def radius_inside_domain(cls, value: float) -> float:
        if not 0 < value < 3 * math.pi / 4:
            raise ValueError("r must lie in (0, 3π/4)")
        return value


class CertificateModel(BaseModel):
    """JSON certificate written by ``validate-lemma``."""

    passed: bool
    points: int
    min_value: float
    min_at: list[float] = Field(min_length=3, max_length=3)
    M: float
    r: float
    eps: float
    seconds: float
    stage1_points: int
    stage2_points: int
    escalations: int
    omega2_min: float
    omega2_min_at: list[float] = Field(min_length=3, max_length=3)
    omega1_min_gradient: float | None = None
    cap_step: float
    failure: list[float] | None = None
    uncertified: list[list[float]] = Field(default_factory=list)
