from hermite_bezier.services.subdivision.geodesic import (
    geodesic_average,
    geodesic_interpolant,
    geodesic_interpolant_arrays,
    slerp_arrays,
    tangent_drift,
)
from hermite_bezier.services.subdivision.refine import ConvergenceTrace, TraceLevel, refine, refine_step
from hermite_bezier.services.subdivision.schemes import hb_lr_step, ihb_step, linear_lr_step
from hermite_bezier.services.subdivision.tangents import estimate_tangents

__all__ = [
    "ConvergenceTrace",
    "TraceLevel",
    "estimate_tangents",
    "geodesic_average",
    "geodesic_interpolant",
    "geodesic_interpolant_arrays",
    "hb_lr_step",
    "ihb_step",
    "linear_lr_step",
    "refine",
    "refine_step",
    "slerp_arrays",
    "tangent_drift",
]
