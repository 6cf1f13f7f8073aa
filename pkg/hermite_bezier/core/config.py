"""Toolkit configuration with strict environment validation."""

import math
import os
from pathlib import Path

from pydantic import Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


_ENV_FILE = Path(__file__).resolve().parents[2] / ".env"


class Settings(BaseSettings):
    """Settings loaded from environment variables or .env file."""

    model_config = SettingsConfigDict(
        env_file=_ENV_FILE if _ENV_FILE.exists() else None,
        env_file_encoding="utf-8",
        extra="ignore",
        case_sensitive=False,
    )

    # --- Metadata & logging ---
    PROJECT_NAME: str = "Hermite-Bezier Refinement Toolkit"
    LOG_LEVEL: str = "INFO"
    LOG_JSON: bool = True
    HERMITE_SEED: int | None = None

    # --- Geometric tolerances ---
    POINT_TOLERANCE: float = 1e-14
    UNIT_TOLERANCE: float = 1e-12
    PARALLEL_TOLERANCE: float = 1e-12
    ALIGNED_ANGLE_TOLERANCE: float = 2e-6
    LINEAR_AVERAGE_TOLERANCE: float = 1e-9
    GRAM_TOLERANCE: float = 1e-10
    ROOT_TOLERANCE: float = 1e-9
    DENOMINATOR_TOLERANCE: float = 1e-12
    VANISHING_TANGENT_TOLERANCE: float = 1e-12
    ANTIPODAL_TOLERANCE: float = 1e-9

    # --- Refinement ---
    MAX_LEVELS: int = 30

    # --- Lemma validation defaults ---
    LEMMA_M: float = 10.0
    LEMMA_R: float = 0.1
    LEMMA_EPS: float = 2.0**-52
    LEMMA_STEP_FLOOR: float = 1e-7
    LEMMA_CAP_STEP: float = 1e-3
    LEMMA_THREADS: int | None = Field(default=None, ge=1)

    # --- Metrics ---
    METRICS_ENABLED: bool = True
    METRICS_NAMESPACE: str = "hermite"

    @field_validator(
        "POINT_TOLERANCE",
        "UNIT_TOLERANCE",
        "PARALLEL_TOLERANCE",
        "ALIGNED_ANGLE_TOLERANCE",
        "LINEAR_AVERAGE_TOLERANCE",
        "GRAM_TOLERANCE",
        "ROOT_TOLERANCE",
        "DENOMINATOR_TOLERANCE",
        "VANISHING_TANGENT_TOLERANCE",
        "ANTIPODAL_TOLERANCE",
        "LEMMA_EPS",
        "LEMMA_STEP_FLOOR",
        "LEMMA_CAP_STEP",
        "LEMMA_M",
    )
    @classmethod
    def validate_positive(cls, value: float) -> float:
        if not value > 0:
            raise ValueError("tolerances and search constants must be positive.")
        return value

    @field_validator("MAX_LEVELS")
    @classmethod
    def validate_max_levels(cls, value: int) -> int:
        if not 0 <= value <= 30:
            raise ValueError("MAX_LEVELS must lie in [0, 30].")
        return value

    @field_validator("LEMMA_R")
    @classmethod
    def validate_radius(cls, value: float) -> float:
        if not 0 < value < 3 * math.pi / 4:
            raise ValueError("LEMMA_R must lie in (0, 3π/4).")
        return value

    @model_validator(mode="after")
    def check_tolerance_order(self) -> "Settings":
        # the aligned bucket must be wider than what arccos can resolve near 0
        if self.ALIGNED_ANGLE_TOLERANCE < math.sqrt(2 * self.PARALLEL_TOLERANCE):
            raise ValueError("ALIGNED_ANGLE_TOLERANCE must be >= sqrt(2*PARALLEL_TOLERANCE).")
        return self

    @property
    def lemma_threads(self) -> int:
        """Worker count for the exhaustive search, defaulting to available CPUs."""
        return self.LEMMA_THREADS or os.cpu_count() or 1


settings = Settings()
