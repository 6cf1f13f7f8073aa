# hermite_bezier/services/invariant_suite.py
"""Reconstruction and contraction checks run by ``reconstruct-check``."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from hermite_bezier.core.logging import get_logger
from hermite_bezier.domain.enums import SchemeKind, Topology
from hermite_bezier.schemas.refine import RefineConfig
from hermite_bezier.services.bezier_average import midpoint_average_arrays
from hermite_bezier.services.experiments.transforms import apply_transform, random_similarity
from hermite_bezier.services.geometry import (
    SIGMA_CONTRACTION_BOUND,
    HermiteSequence,
    pair_geometry_arrays,
)
from hermite_bezier.services.subdivision import refine

logger = get_logger("hermite_bezier.invariants")

SIGMA_FACTOR = math.sqrt(0.9)
DISTANCE_FACTOR = 5 / 6


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    value: float
    threshold: float
    detail: str = ""


def _unit(rng: np.random.Generator, count: int, dimension: int) -> np.ndarray:
    vectors = rng.standard_normal((count, dimension))
    return vectors / np.linalg.norm(vectors, axis=1)[:, None]


def random_admissible_pairs(
    rng: np.random.Generator,
    count: int,
    dimension: int = 3,
    sigma_max: float = SIGMA_CONTRACTION_BOUND,
    sum_max: float | None = None,
    min_angle: float = 1e-3,
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Stacks (p0, v0, p1, v1) with σ ≤ ``sigma_max`` and optionally θ₀+θ₁ ≤ ``sum_max``."""
    angles = np.empty((0, 2))
    while angles.shape[0] < count:
        batch = rng.uniform(min_angle, sigma_max, size=(2 * count, 2))
        keep = np.hypot(batch[:, 0], batch[:, 1]) <= sigma_max
        if sum_max is not None:
            keep &= batch.sum(axis=1) <= sum_max
        angles = np.vstack([angles, batch[keep]])
    theta0, theta1 = angles[:count, 0], angles[:count, 1]

    u = _unit(rng, count, dimension)
    p0 = rng.uniform(-5.0, 5.0, size=(count, dimension))
    p1 = p0 + rng.uniform(0.1, 3.0, size=count)[:, None] * u

    def tilt(theta: np.ndarray) -> np.ndarray:
        w = rng.standard_normal((count, dimension))
        w -= np.einsum("ij,ij->i", w, u)[:, None] * u
        w /= np.linalg.norm(w, axis=1)[:, None]
        return np.cos(theta)[:, None] * u + np.sin(theta)[:, None] * w

    return p0, tilt(theta0), p1, tilt(theta1)


def check_line_reconstruction(rng: np.random.Generator, levels: int = 6) -> list[CheckResult]:
    direction = _unit(rng, 1, 3)[0]
    origin = rng.uniform(-1.0, 1.0, 3)
    points = origin + np.outer(np.arange(5.0), direction)
    data = HermiteSequence.from_arrays(points, np.tile(direction, (5, 1)))
    results = []
    for cfg in (
        RefineConfig(scheme=SchemeKind.ihb, levels=levels),
        RefineConfig(scheme=SchemeKind.hb_lr, m=3, levels=levels),
    ):
        refined, _ = refine(data, cfg)
        rel = refined.points - origin
        off_line = rel - np.outer(rel @ direction, direction)
        deviation = max(
            float(np.max(np.linalg.norm(off_line, axis=1))),
            float(np.max(np.linalg.norm(refined.tangents - direction, axis=1))),
        )
        results.append(CheckResult(f"line/{cfg.label}", deviation <= 1e-12, deviation, 1e-12))
    return results


def check_circle_reconstruction(levels: int = 6, count: int = 4, radius: float = 1.0) -> list[CheckResult]:
    angles = 2 * math.pi * np.arange(count) / count
    points = radius * np.column_stack([np.cos(angles), np.sin(angles)])
    tangents = np.column_stack([-np.sin(angles), np.cos(angles)])
    data = HermiteSequence.from_arrays(points, tangents, Topology.closed)
    results = []
    for cfg in (
        RefineConfig(scheme=SchemeKind.ihb, levels=levels),
        RefineConfig(scheme=SchemeKind.hb_lr, m=3, levels=levels),
    ):
        refined, trace = refine(data, cfg)
        radial = float(np.max(np.abs(np.linalg.norm(refined.points, axis=1) - radius)))
        normal = float(np.max(np.abs(np.einsum("ij,ij->i", refined.points, refined.tangents)))) / radius
        results.append(CheckResult(f"circle/{cfg.label}/radius", radial <= 1e-10 * radius, radial, 1e-10 * radius))
        results.append(CheckResult(f"circle/{cfg.label}/tangent", normal <= 1e-9, normal, 1e-9))
        if cfg.scheme is SchemeKind.ihb:
            worst = max(abs(ratio - 0.5) for ratio in trace.sigma_ratios())
            results.append(CheckResult("circle/ihb/sigma-ratio", worst <= 1e-9, worst, 1e-9))
    return results


def _random_sequence(rng: np.random.Generator, dimension: int, count: int = 6) -> HermiteSequence:
    axis = _unit(rng, 1, dimension)[0]
    points = np.outer(np.arange(float(count)), axis) + 0.2 * rng.standard_normal((count, dimension))
    tangents = axis + 0.3 * rng.standard_normal((count, dimension))
    return HermiteSequence.from_arrays(points, tangents)


def check_similarity(
    rng: np.random.Generator, trials: int = 100, levels: int = 3, dimensions: tuple[int, ...] = (2, 3, 5)
) -> list[CheckResult]:
    cfg = RefineConfig(scheme=SchemeKind.ihb, levels=levels)
    results = []
    for dimension in dimensions:
        worst = 0.0
        for _ in range(trials):
            data = _random_sequence(rng, dimension)
            transform = random_similarity(rng, dimension)
            refined, _ = refine(data, cfg)
            moved, _ = refine(apply_transform(data, transform), cfg)
            expected = apply_transform(refined, transform)
            size = transform.scale + float(np.max(np.abs(transform.translation)))
            point_error = float(np.max(np.abs(moved.points - expected.points))) / (1.0 + size)
            tangent_error = float(np.max(np.abs(moved.tangents - expected.tangents)))
            worst = max(worst, point_error, tangent_error)
        results.append(CheckResult(f"similarity/{dimension}d", worst <= 1e-10, worst, 1e-10))
    return results


def check_sigma_contraction(rng: np.random.Generator, count: int = 100_000, dimension: int = 3) -> CheckResult:
    p0, v0, p1, v1 = random_admissible_pairs(rng, count, dimension)
    pm, vm = midpoint_average_arrays(p0, v0, p1, v1)
    sigma = pair_geometry_arrays(p0, v0, p1, v1)["sigma"]
    left = pair_geometry_arrays(p0, v0, pm, vm)["sigma"]
    right = pair_geometry_arrays(pm, vm, p1, v1)["sigma"]
    excess = float(np.max(np.maximum(left, right) - SIGMA_FACTOR * sigma))
    return CheckResult("sigma-contraction", excess <= 1e-12, excess, 1e-12, f"{count} configurations")


def check_distance_contraction(rng: np.random.Generator, count: int = 100_000, dimension: int = 3) -> CheckResult:
    p0, v0, p1, v1 = random_admissible_pairs(rng, count, dimension, sum_max=2 * math.pi / 3)
    pm, _ = midpoint_average_arrays(p0, v0, p1, v1)
    distance = np.linalg.norm(p1 - p0, axis=1)
    child = np.maximum(np.linalg.norm(pm - p0, axis=1), np.linalg.norm(p1 - pm, axis=1))
    excess = float(np.max(child - DISTANCE_FACTOR * distance))
    return CheckResult("distance-contraction", excess <= 1e-12, excess, 1e-12, f"{count} configurations")


def run_suite(rng: np.random.Generator, samples: int = 10_000) -> list[CheckResult]:
    results = [
        *check_line_reconstruction(rng),
        *check_circle_reconstruction(),
        *check_similarity(rng, trials=max(1, samples // 100)),
        check_sigma_contraction(rng, samples),
        check_distance_contraction(rng, samples),
    ]
    failed = [result.name for result in results if not result.passed]
    logger.info("invariant suite done", extra={"checks": len(results), "failed": failed})
    return results
