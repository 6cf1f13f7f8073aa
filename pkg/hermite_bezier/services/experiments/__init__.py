from hermite_bezier.services.experiments.comparison import (
    ComparisonRow,
    compare_schemes,
    compare_sine_schemes,
    compare_spiral_variants,
)
from hermite_bezier.services.experiments.curves import QUINTIC, CurveSpec, sample_curve
from hermite_bezier.services.experiments.distances import directed_hausdorff, functional_error, hausdorff
from hermite_bezier.services.experiments.order import OrderReport, fit_order, order_experiment, refined_polyline
from hermite_bezier.services.experiments.transforms import SimilarityTransform, apply_transform, random_similarity

__all__ = [
    "QUINTIC",
    "ComparisonRow",
    "CurveSpec",
    "OrderReport",
    "SimilarityTransform",
    "apply_transform",
    "compare_schemes",
    "compare_sine_schemes",
    "compare_spiral_variants",
    "directed_hausdorff",
    "fit_order",
    "functional_error",
    "hausdorff",
    "order_experiment",
    "random_similarity",
    "refined_polyline",
    "sample_curve",
]
