# hermite_bezier/services/experiments/order.py
"""Approximation order: refine samples of a functional curve and fit e(h) ≈ C·h^β."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from hermite_bezier.core.logging import get_logger
from hermite_bezier.domain.enums import SchemeKind
from hermite_bezier.schemas.refine import RefineConfig
from hermite_bezier.services.exceptions import NonFunctionalInputError, ParameterError
from hermite_bezier.services.experiments.curves import CurveSpec, sample_curve
from hermite_bezier.services.experiments.distances import functional_error
from hermite_bezier.services.geometry import HermiteSequence
from hermite_bezier.services.subdivision import linear_lr_step, refine

logger = get_logger("hermite_bezier.experiments")

ERROR_FLOOR = 1e3 * np.finfo(np.float64).eps
MIN_ROWS = 4
MIN_DEPTH = 6


@dataclass(frozen=True)
class OrderReport:
    rows: list[tuple[float, float]]
    slope: float
    intercept: float
    residual: float
    scheme: str
    depth: int

    def csv_rows(self) -> list[tuple[float, float, float, float]]:
        return [(h, e, float(np.log10(h)), float(np.log10(e)) if e > 0 else float("-inf")) for h, e in self.rows]

    def summary(self) -> dict:
        return {
            "slope": self.slope,
            "intercept": self.intercept,
            "residual": self.residual,
            "scheme": self.scheme,
            "depth": self.depth,
        }


def fit_order(h_values: Sequence[float], errors: Sequence[float]) -> tuple[float, float, float]:
    """Least-squares line through (log10 h, log10 e); rows at the roundoff floor are dropped.

    Returns ``(slope, intercept, residual)`` with the residual as the RMS misfit
    in log10 units.
    """
    h = np.asarray(h_values, dtype=np.float64)
    e = np.asarray(errors, dtype=np.float64)
    keep = e >= ERROR_FLOOR
    if np.count_nonzero(keep) < 2:
        raise ParameterError("Fewer than two errors above the roundoff floor; the order cannot be fitted.")
    x, y = np.log10(h[keep]), np.log10(e[keep])
    slope, intercept = np.polyfit(x, y, 1)
    residual = float(np.sqrt(np.mean((y - (slope * x + intercept)) ** 2)))
    return float(slope), float(intercept), residual


def refined_polyline(sequence: HermiteSequence, cfg: RefineConfig, depth: int) -> np.ndarray:
    """Vertices after ``depth`` levels; linear schemes refine the points alone."""
    if cfg.scheme is SchemeKind.linear_lr:
        points = sequence.points
        for _ in range(depth):
            points = linear_lr_step(points, cfg.m, closed=sequence.is_closed)
        return points
    refined, _ = refine(sequence, cfg.model_copy(update={"levels": depth}))
    return refined.points


def order_experiment(
    spec: CurveSpec,
    scheme: RefineConfig,
    h_list: Sequence[float],
    depth: int = 10,
    workers: int = 1,
) -> OrderReport:
    if not spec.is_functional:
        raise NonFunctionalInputError(f"Order experiments need a functional curve, got '{spec.kind.value}'.")
    h_values = [float(h) for h in h_list]
    if len(h_values) < MIN_ROWS:
        raise ParameterError(f"Order experiments need at least {MIN_ROWS} step sizes.")
    if any(b >= a for a, b in zip(h_values, h_values[1:])):
        raise ParameterError("Step sizes must be strictly decreasing.")
    if depth < MIN_DEPTH:
        raise ParameterError(f"Refinement depth must be >= {MIN_DEPTH}.", depth=depth)

    def cell(h: float) -> float:
        curve = spec.with_step(h)
        error = functional_error(curve, refined_polyline(sample_curve(curve), scheme, depth))
        logger.debug("order cell done", extra={"h": h, "error": error, "scheme": scheme.label})
        return error

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            errors = list(pool.map(cell, h_values))
    else:
        errors = [cell(h) for h in h_values]

    slope, intercept, residual = fit_order(h_values, errors)
    logger.info("order experiment done", extra={"scheme": scheme.label, "slope": slope})
    return OrderReport(
        rows=list(zip(h_values, errors)),
        slope=slope,
        intercept=intercept,
        residual=residual,
        scheme=scheme.label,
        depth=depth,
    )
