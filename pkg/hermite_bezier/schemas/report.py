# hermite_bezier/schemas/report.py
from pydantic import BaseModel


class OrderSummaryModel(BaseModel):
    slope: float
    intercept: float
    residual: float
    scheme: str
    depth: int
