# hermite_bezier/schemas/bezier.py
from pydantic import BaseModel, Field, field_validator


class BezierSegmentModel(BaseModel):
    q: list[list[float]] = Field(min_length=4, max_length=4)
    alpha: float = Field(gt=0)

    @field_validator("q")
    @classmethod
    def same_dimension(cls, value: list[list[float]]) -> list[list[float]]:
        if len({len(point) for point in value}) != 1:
            raise ValueError("control points must share one dimension")
        return value
