# hermite_bezier/schemas/refine.py
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from hermite_bezier.core.config import settings
from hermite_bezier.domain.enums import AlphaVariant, BoundaryPolicy, SchemeKind


class RefineConfig(BaseModel):
    """Scheme selection for ``refine``; the sequence topology is checked when refining."""

    scheme: SchemeKind = SchemeKind.ihb
    m: int = Field(default=1, ge=1)
    levels: int = Field(default=1, ge=0)
    variant: AlphaVariant = AlphaVariant.paper
    boundary: BoundaryPolicy = BoundaryPolicy.clamp

    model_config = ConfigDict(frozen=True)

    @field_validator("levels")
    @classmethod
    def level_guard(cls, value: int) -> int:
        if value > settings.MAX_LEVELS:
            raise ValueError(f"levels must be <= {settings.MAX_LEVELS}")
        return value

    @model_validator(mode="after")
    def ihb_has_no_rounds(self) -> "RefineConfig":
        if self.scheme is SchemeKind.ihb and self.m != 1:
            raise ValueError("m only applies to the Lane-Riesenfeld schemes")
        return self

    @property
    def label(self) -> str:
        if self.scheme is SchemeKind.ihb:
            return "ihb"
        return f"{self.scheme.value}{self.m}"
