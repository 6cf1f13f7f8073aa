# hermite_bezier/schemas/hermite.py
import math

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from hermite_bezier.domain.enums import Topology


# --- Hermite data files ---
class HermiteSampleModel(BaseModel):
    point: list[float] = Field(min_length=2)
    tangent: list[float] = Field(min_length=2)

    @field_validator("point", "tangent")
    @classmethod
    def finite(cls, value: list[float]) -> list[float]:
        if not all(math.isfinite(x) for x in value):
            raise ValueError("coordinates must be finite")
        return value

    @model_validator(mode="after")
    def normalize_tangent(self) -> "HermiteSampleModel":
        if len(self.point) != len(self.tangent):
            raise ValueError("point and tangent dimensions differ")
        norm = math.sqrt(sum(x * x for x in self.tangent))
        if norm < 1e-12:
            raise ValueError("tangent is (near) zero")
        self.tangent = [x / norm for x in self.tangent]
        return self


class HermiteDataModel(BaseModel):
    dimension: int = Field(ge=2)
    topology: Topology = Topology.open
    samples: list[HermiteSampleModel] = Field(min_length=2)

    @model_validator(mode="after")
    def check_dimensions(self) -> "HermiteDataModel":
        for index, sample in enumerate(self.samples):
            if len(sample.point) != self.dimension:
                raise ValueError(f"sample {index} has dimension {len(sample.point)}, expected {self.dimension}")
        return self


class AverageRequestModel(BaseModel):
    """Input of the ``average`` command: two samples and a weight."""

    a: HermiteSampleModel
    b: HermiteSampleModel
    w: float = Field(default=0.5, ge=0.0, le=1.0)


class AverageResultModel(BaseModel):
    point: list[float]
    tangent: list[float]
    w: float
    variant: str
    model_config = ConfigDict(frozen=True)
