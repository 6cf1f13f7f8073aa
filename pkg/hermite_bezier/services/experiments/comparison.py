# hermite_bezier/services/experiments/comparison.py
"""Side-by-side scheme runs on spirals and the sine curve."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from hermite_bezier.core.logging import get_logger
from hermite_bezier.domain.enums import AlphaVariant, CurveKind, SchemeKind, StepSpacing
from hermite_bezier.schemas.refine import RefineConfig
from hermite_bezier.services.experiments.curves import CurveSpec, sample_curve
from hermite_bezier.services.experiments.distances import functional_error, hausdorff
from hermite_bezier.services.experiments.order import refined_polyline
from hermite_bezier.services.subdivision import estimate_tangents

logger = get_logger("hermite_bezier.experiments")

SPIRAL_STEPS = (math.pi / 2, math.pi / 4, math.pi / 8)
SINE_STEPS = (math.pi, 2 * math.pi / 3)


@dataclass(frozen=True)
class ComparisonRow:
    curve: str
    h: float
    scheme: str
    variant: str
    error: float


def compare_spiral_variants(
    kind: CurveKind = CurveKind.spiral2d,
    steps: Sequence[float] = SPIRAL_STEPS,
    levels: int = 6,
    spacing: StepSpacing = StepSpacing.parametric,
    reference_points: int = 20_001,
) -> list[ComparisonRow]:
    """IHB with both α rules at decreasing densities, measured by Hausdorff distance to the curve."""
    rows = []
    for h in steps:
        spec = CurveSpec.of(kind, h, spacing=spacing)
        reference = spec.dense(reference_points)
        data = sample_curve(spec)
        for variant in AlphaVariant:
            cfg = RefineConfig(scheme=SchemeKind.ihb, levels=levels, variant=variant)
            error = hausdorff(refined_polyline(data, cfg, levels), reference)
            rows.append(ComparisonRow(kind.value, h, cfg.label, variant.value, error))
            logger.debug("spiral comparison cell", extra={"h": h, "variant": variant.value, "error": error})
    return rows


def compare_sine_schemes(
    steps: Sequence[float] = SINE_STEPS,
    levels: int = 6,
    m: int = 3,
    estimated_tangents: bool = False,
) -> list[ComparisonRow]:
    """HB-LRm against linear LRm on samples of (t, sin t), measured by functional error."""
    rows = []
    for h in steps:
        spec = CurveSpec.of(CurveKind.sine, h)
        data = sample_curve(spec)
        if estimated_tangents:
            data = estimate_tangents(data.points, data.topology)
        label = "estimated" if estimated_tangents else "true"
        for scheme in (SchemeKind.hb_lr, SchemeKind.linear_lr):
            cfg = RefineConfig(scheme=scheme, m=m, levels=levels)
            error = functional_error(spec, refined_polyline(data, cfg, levels))
            rows.append(ComparisonRow(f"sine/{label}", h, cfg.label, cfg.variant.value, error))
    return rows


def compare_schemes(levels: int = 6) -> list[ComparisonRow]:
    """Every comparison run, in a fixed order."""
    rows = []
    for kind in (CurveKind.spiral2d, CurveKind.spiral3d):
        rows.extend(compare_spiral_variants(kind, levels=levels))
    rows.extend(compare_sine_schemes(levels=levels))
    rows.extend(compare_sine_schemes(levels=levels, estimated_tangents=True))
    return rows
