from hermite_bezier.schemas.bezier import BezierSegmentModel
from hermite_bezier.schemas.certificate import CertificateModel, SearchParams
from hermite_bezier.schemas.hermite import (
    AverageRequestModel,
    AverageResultModel,
    HermiteDataModel,
    HermiteSampleModel,
)
from hermite_bezier.schemas.refine import RefineConfig
from hermite_bezier.schemas.report import OrderSummaryModel

__all__ = [
    "AverageRequestModel",
    "AverageResultModel",
    "BezierSegmentModel",
    "CertificateModel",
    "HermiteDataModel",
    "HermiteSampleModel",
    "OrderSummaryModel",
    "RefineConfig",
    "SearchParams",
]
