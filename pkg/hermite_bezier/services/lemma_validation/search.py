# hermite_bezier/services/lemma_validation/search.py
"""Exhaustive Lipschitz search certifying D ≥ 0 over Ω.

Stage 1 handles the small ball Ω₁ = B_r(0) ∩ Ω through its boundary: the
sphere cap and the three planes θ = θ₀+θ₁, θ = θ₁−θ₀, θ = θ₀−θ₁ are sampled
densely and must carry D ≥ 0; D(0) = 0 is recorded as the minimum of Ω₁.

Stage 2 sweeps Ω₂ = Ω ∖ Ω₁ with lines along θ, one per square column of
half-width ``h`` in (θ₀, θ₁).  M bounds the variation of D in the sup norm, so a
value D(x) ≥ eps certifies the cube of half-width ``(D − eps) / M`` around x.
Each line runs on the column centre pulled into the disc σ ≤ 3π/4, so every
evaluated point lies in Ω, and it must cover the θ range that the column can
meet.  A line that cannot reach across its column splits the column into four.
Below ``step_floor`` a column is not split again: the line steps by the floor,
checks the skipped stretch at its midpoint and reports it as uncertified, and
the certificate does not pass.
"""
from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from hermite_bezier.core.logging import get_logger
from hermite_bezier.core.metrics import record_lemma_points
from hermite_bezier.schemas.certificate import SearchParams
from hermite_bezier.services.exceptions import ParameterError
from hermite_bezier.services.lemma_validation.closed_forms import (
    OMEGA_RADIUS,
    AngleTriple,
    d_value_arrays,
    gradient_probe,
    in_omega_arrays,
    theta_tilde_arrays,
)

logger = get_logger("hermite_bezier.lemma")

Objective = Callable[[np.ndarray, np.ndarray, np.ndarray], np.ndarray]

INITIAL_TILES = 8
LINES_PER_TILE = 4
PLANE_RADIAL_STEPS = 200
INTERIOR_GRADIENT_SAMPLES = 24
MAX_REPORTED_ESCALATIONS = 64


@dataclass
class VerificationCertificate:
    passed: bool
    points_evaluated: int
    min_value: float
    min_location: AngleTriple
    params: SearchParams
    wall_time: float
    stage1_points: int = 0
    stage2_points: int = 0
    escalations: int = 0
    omega2_min: float = math.inf
    omega2_min_location: tuple[float, float, float] = (0.0, 0.0, 0.0)
    omega1_min_gradient: float = math.nan
    failure: tuple[float, float, float] | None = None
    uncertified: list[tuple[float, float, float]] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "points": self.points_evaluated,
            "min_value": self.min_value,
            "min_at": list(self.min_location.as_tuple()),
            "M": self.params.M,
            "r": self.params.r,
            "eps": self.params.eps,
            "seconds": self.wall_time,
            "stage1_points": self.stage1_points,
            "stage2_points": self.stage2_points,
            "escalations": self.escalations,
            "omega2_min": self.omega2_min,
            "omega2_min_at": list(self.omega2_min_location),
            "omega1_min_gradient": self.omega1_min_gradient,
            "cap_step": self.params.cap_step,
            "failure": None if self.failure is None else list(self.failure),
            "uncertified": [list(p) for p in self.uncertified],
        }


@dataclass
class _SweepResult:
    points: int = 0
    escalations: int = 0
    min_value: float = math.inf
    min_at: tuple[float, float, float] = (0.0, 0.0, 0.0)
    failure: tuple[float, float, float] | None = None
    uncertified: list[tuple[float, float, float]] = field(default_factory=list)

    def record(
        self, values: np.ndarray, t0: np.ndarray, t1: np.ndarray, theta: np.ndarray, eps: float, r2: float
    ) -> bool:
        """Track the Ω₂ minimum; False once a value below eps is seen."""
        outer = np.isfinite(values) & (t0 * t0 + t1 * t1 + theta * theta >= r2)
        if np.any(outer):
            idx = np.flatnonzero(outer)
            best = idx[np.argmin(values[idx])]
            candidate = (float(values[best]), (float(t0[best]), float(t1[best]), float(theta[best])))
            if candidate < (self.min_value, self.min_at):
                self.min_value, self.min_at = candidate
        failed = ~(values >= eps)
        if np.any(failed):
            k = int(np.flatnonzero(failed)[0])
            self.failure = (float(t0[k]), float(t1[k]), float(theta[k]))
            logger.warning("non-negativity violated", extra={"point": list(self.failure)})
            return False
        return True

    def escalate(self, t0: np.ndarray, t1: np.ndarray, theta: np.ndarray) -> None:
        self.escalations += int(t0.size)
        room = MAX_REPORTED_ESCALATIONS - len(self.uncertified)
        if room > 0:
            self.uncertified.extend(
                (float(a), float(b), float(c)) for a, b, c in zip(t0[:room], t1[:room], theta[:room])
            )

    def merge(self, other: "_SweepResult") -> "_SweepResult":
        merged = _SweepResult(
            points=self.points + other.points,
            escalations=self.escalations + other.escalations,
            uncertified=sorted(self.uncertified + other.uncertified)[:MAX_REPORTED_ESCALATIONS],
        )
        best = min((self.min_value, self.min_at), (other.min_value, other.min_at))
        merged.min_value, merged.min_at = best
        failures = [f for f in (self.failure, other.failure) if f is not None]
        merged.failure = min(failures) if failures else None
        return merged


# --- Stage 1 ---

@dataclass
class _StageOne:
    points: int = 0
    failure: tuple[float, float, float] | None = None
    min_gradient: float = math.nan


def _boundary_samples(r: float, cap_step: float) -> np.ndarray:
    """Points of ∂Ω₁ (sphere cap plus the three bounding planes), origin excluded."""
    angles = np.arange(0.0, math.pi / 2 + cap_step, cap_step)
    polar, azimuth = np.meshgrid(angles, angles, indexing="ij")
    cap = r * np.stack(
        [np.sin(polar) * np.cos(azimuth), np.sin(polar) * np.sin(azimuth), np.cos(polar)], axis=-1
    ).reshape(-1, 3)
    cap = cap[in_omega_arrays(cap[:, 0], cap[:, 1], cap[:, 2])]

    radii = np.linspace(r / PLANE_RADIAL_STEPS, r, PLANE_RADIAL_STEPS)
    rad, azi = np.meshgrid(radii, angles, indexing="ij")
    t0 = (rad * np.cos(azi)).ravel()
    t1 = (rad * np.sin(azi)).ravel()
    planes = []
    for theta in (t0 + t1, t1 - t0, t0 - t1):
        keep = (theta >= 0) & (t0 * t0 + t1 * t1 + theta * theta <= r * r)
        planes.append(np.stack([t0[keep], t1[keep], theta[keep]], axis=-1))
    return np.vstack([cap, *planes])


def _interior_gradient(r: float) -> float:
    """Smallest central-difference gradient norm over a small interior sample of Ω₁."""
    norms = []
    for fraction in np.linspace(0.2, 0.9, INTERIOR_GRADIENT_SAMPLES):
        rho = fraction * r / math.sqrt(3)
        for mix in (0.3, 0.5, 0.7):
            t = AngleTriple(rho * mix * 2, rho * (1 - mix) * 2, rho)
            if in_omega_arrays(t.theta0, t.theta1, t.theta):
                norms.append(float(np.linalg.norm(gradient_probe(t, h=1e-3 * rho))))
    return min(norms) if norms else math.nan


def _stage_one(params: SearchParams, objective: Objective) -> _StageOne:
    samples = _boundary_samples(params.r, params.cap_step)
    values = objective(samples[:, 0], samples[:, 1], samples[:, 2])
    result = _StageOne(points=int(samples.shape[0]))
    bad = np.flatnonzero(~(values >= 0.0))
    if bad.size:
        result.failure = tuple(float(x) for x in samples[bad[0]])
    result.min_gradient = _interior_gradient(params.r)
    return result


# --- Stage 2 ---

@dataclass
class _Lines:
    """Active sweep lines, one per (θ₀, θ₁) column, as parallel arrays."""

    xc: np.ndarray
    yc: np.ndarray
    h: np.ndarray
    cover: np.ndarray
    theta: np.ndarray

    def take(self, mask: np.ndarray) -> "_Lines":
        return _Lines(self.xc[mask], self.yc[mask], self.h[mask], self.cover[mask], self.theta[mask])

    def extend(self, other: "_Lines") -> "_Lines":
        return _Lines(
            *(np.concatenate([a, b]) for a, b in zip(
                (self.xc, self.yc, self.h, self.cover, self.theta),
                (other.xc, other.yc, other.h, other.cover, other.theta),
            ))
        )

    @property
    def size(self) -> int:
        return int(self.xc.size)


@dataclass
class _Columns:
    """Per-column geometry: evaluation axis inside Ω and the θ range to cover."""

    ex: np.ndarray
    ey: np.ndarray
    width: np.ndarray
    lower: np.ndarray
    upper: np.ndarray
    last: np.ndarray


def _column_geometry(xc: np.ndarray, yc: np.ndarray, h: np.ndarray, cover: np.ndarray, r: float) -> _Columns:
    # axis pulled into the disc σ ≤ 3π/4 when the centre lies outside it
    scale = np.minimum(1.0, OMEGA_RADIUS / np.hypot(xc, yc)) * (1.0 - 4 * np.finfo(np.float64).eps)
    scale = np.where(np.hypot(xc, yc) <= OMEGA_RADIUS, 1.0, scale)
    ex, ey = xc * scale, yc * scale
    width = h + np.maximum(np.abs(xc - ex), np.abs(yc - ey))
    low = np.abs(ey - ex)
    last = np.minimum(ex + ey, math.pi)
    far2 = (xc + h) ** 2 + (yc + h) ** 2
    radial = np.sqrt(np.maximum(0.0, r * r - far2))
    lower = np.maximum.reduce([np.zeros_like(xc), low - 2 * width, radial, cover])
    upper = np.minimum(last + 2 * width, math.pi)
    return _Columns(ex, ey, width, lower, upper, last)


def _start_lines(xc: np.ndarray, yc: np.ndarray, h: np.ndarray, cover: np.ndarray, r: float) -> _Lines:
    """Lines for fresh columns; columns with nothing left to cover are dropped."""
    cols = _column_geometry(xc, yc, h, cover, r)
    live = cols.lower < cols.upper
    first = np.minimum(np.maximum(np.abs(cols.ey - cols.ex), cols.lower), cols.last)
    return _Lines(xc[live], yc[live], h[live], cols.lower[live], first[live])


def _initial_cells(tile_indices: list[tuple[int, int]]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    tile = OMEGA_RADIUS / INITIAL_TILES
    half = tile / (2 * LINES_PER_TILE)
    offsets = (2 * np.arange(LINES_PER_TILE) + 1) * half
    xs, ys = [], []
    for i, j in tile_indices:
        gx, gy = np.meshgrid(i * tile + offsets, j * tile + offsets, indexing="ij")
        xs.append(gx.ravel())
        ys.append(gy.ravel())
    xc = np.concatenate(xs) if xs else np.empty(0)
    yc = np.concatenate(ys) if ys else np.empty(0)
    return xc, yc, np.full(xc.shape, half)


def _keep_cells(xc: np.ndarray, yc: np.ndarray, h: np.ndarray) -> np.ndarray:
    near = np.hypot(np.maximum(xc - h, 0.0), np.maximum(yc - h, 0.0))
    return near <= OMEGA_RADIUS


def _split(lines: _Lines, r: float) -> _Lines:
    quarter = lines.h / 2
    cx = np.concatenate([lines.xc - quarter, lines.xc + quarter, lines.xc - quarter, lines.xc + quarter])
    cy = np.concatenate([lines.yc - quarter, lines.yc - quarter, lines.yc + quarter, lines.yc + quarter])
    ch = np.tile(quarter, 4)
    cover = np.tile(lines.cover, 4)
    keep = _keep_cells(cx, cy, ch)
    return _start_lines(cx[keep], cy[keep], ch[keep], cover[keep], r)


def _sweep(
    tile_indices: list[tuple[int, int]], params: SearchParams, objective: Objective
) -> _SweepResult:
    result = _SweepResult()
    xc, yc, h = _initial_cells(tile_indices)
    keep = _keep_cells(xc, yc, h)
    lines = _start_lines(xc[keep], yc[keep], h[keep], np.zeros(int(np.count_nonzero(keep))), params.r)
    r2 = params.r * params.r

    while lines.size:
        cols = _column_geometry(lines.xc, lines.yc, lines.h, lines.cover, params.r)
        theta = lines.theta
        values = objective(cols.ex, cols.ey, theta)
        result.points += lines.size
        if not result.record(values, cols.ex, cols.ey, theta, params.eps, r2):
            return result

        # sup-norm ball of half-width d around the axis point is certified
        reach = np.where(np.isfinite(values), (values - params.eps) / params.M, -1.0)
        at_end = theta >= cols.last
        ok = (reach >= cols.width) & (theta - reach <= lines.cover) & (~at_end | (theta + reach >= cols.upper))

        stalled = ~ok
        floor = stalled & (lines.h / 2 < params.step_floor)
        children = _split(lines.take(stalled & ~floor), params.r) if np.any(stalled & ~floor) else None

        cover = np.where(ok, theta + reach, lines.cover)
        if np.any(floor):
            # no finer column is allowed: step by the floor, check the skipped stretch
            # at its midpoint and report it as uncertified
            idx = np.flatnonzero(floor)
            mid = np.minimum(theta[idx] + params.step_floor / 2, cols.last[idx])
            mid_values = objective(cols.ex[idx], cols.ey[idx], mid)
            result.points += idx.size
            if not result.record(mid_values, cols.ex[idx], cols.ey[idx], mid, params.eps, r2):
                return result
            result.escalate(cols.ex[idx], cols.ey[idx], theta[idx])
            cover[idx] = np.maximum(lines.cover[idx], theta[idx] + params.step_floor)

        moving = (ok | floor) & (cover < cols.upper) & ~(at_end & ok)
        nxt = lines.take(moving)
        nxt.cover = cover[moving]
        nxt.theta = np.minimum(np.maximum(cover[moving], theta[moving]), cols.last[moving])
        # a line stuck at its last point after a floor step has nothing left to advance
        stuck = floor[moving] & (theta[moving] >= cols.last[moving])
        if np.any(stuck):
            nxt = nxt.take(~stuck)
        lines = nxt.extend(children) if children is not None else nxt
    return result


def _partition_tiles(threads: int) -> list[list[tuple[int, int]]]:
    tiles = [(i, j) for i in range(INITIAL_TILES) for j in range(INITIAL_TILES)]
    return [tiles[k::threads] for k in range(threads)]


def verify_nonnegativity(
    params: SearchParams, objective: Objective | None = None
) -> VerificationCertificate:
    """Run both stages and return the certificate.

    ``objective`` replaces D in both stages; it exists so the engine itself can
    be exercised against functions that must fail.
    """
    if not 0 < params.r < OMEGA_RADIUS:
        raise ParameterError("r must lie strictly inside the domain radius 3π/4.", r=params.r)
    objective = objective or d_value_arrays
    started = time.perf_counter()

    stage_one = _stage_one(params, objective)
    record_lemma_points("stage1", stage_one.points)
    logger.info(
        "stage 1 done",
        extra={"points": stage_one.points, "failure": stage_one.failure, "min_gradient": stage_one.min_gradient},
    )
    origin = AngleTriple(0.0, 0.0, 0.0)
    origin_value = float(objective(np.zeros(1), np.zeros(1), np.zeros(1))[0])

    if stage_one.failure is not None:
        sweep = _SweepResult()
    else:
        chunks = [chunk for chunk in _partition_tiles(params.threads) if chunk]
        if len(chunks) == 1:
            sweep = _sweep(chunks[0], params, objective)
        else:
            with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
                parts = list(pool.map(lambda chunk: _sweep(chunk, params, objective), chunks))
            sweep = parts[0]
            for part in parts[1:]:
                sweep = sweep.merge(part)
        record_lemma_points("stage2", sweep.points)
        logger.info(
            "stage 2 done",
            extra={"points": sweep.points, "escalations": sweep.escalations, "min_value": sweep.min_value},
        )

    failure = stage_one.failure or sweep.failure
    if failure is None and not origin_value >= 0.0:
        failure = origin.as_tuple()
    if failure is not None:
        min_value = float(objective(*(np.array([x]) for x in failure))[0])
        min_location = AngleTriple(*failure)
    elif sweep.min_value < origin_value:
        min_value, min_location = sweep.min_value, AngleTriple(*sweep.min_at)
    else:
        min_value, min_location = origin_value, origin

    return VerificationCertificate(
        passed=failure is None and sweep.escalations == 0,
        points_evaluated=stage_one.points + sweep.points,
        min_value=min_value,
        min_location=min_location,
        params=params,
        wall_time=time.perf_counter() - started,
        stage1_points=stage_one.points,
        stage2_points=sweep.points,
        escalations=sweep.escalations,
        omega2_min=sweep.min_value,
        omega2_min_location=sweep.min_at,
        omega1_min_gradient=stage_one.min_gradient,
        failure=failure,
        uncertified=sweep.uncertified,
    )


# --- supporting evidence ---

def sample_omega(rng: np.random.Generator, count: int, margin: float = 0.0) -> np.ndarray:
    """Uniform-ish random triples of Ω, rows (θ₀, θ₁, θ), kept ``margin`` away from the edges."""
    rows = []
    total = 0
    while total < count:
        batch = rng.uniform(0.0, OMEGA_RADIUS, size=(2 * count, 2))
        batch = batch[np.hypot(batch[:, 0], batch[:, 1]) <= OMEGA_RADIUS - margin]
        lo = np.abs(batch[:, 1] - batch[:, 0]) + margin
        hi = np.minimum(batch[:, 0] + batch[:, 1], math.pi) - margin
        keep = hi > lo
        batch, lo, hi = batch[keep], lo[keep], hi[keep]
        theta = lo + rng.uniform(size=lo.shape) * (hi - lo)
        rows.append(np.column_stack([batch, theta]))
        total += batch.shape[0]
    return np.vstack(rows)[:count]


@dataclass(frozen=True)
class GradientEstimate:
    sup_norm: float
    location: tuple[float, float, float]
    samples: int


def estimate_gradient_bound(
    rng: np.random.Generator, samples: int = 100_000, h: float = 1e-6
) -> GradientEstimate:
    """Largest sup-norm of the finite-difference gradient of D over random Ω samples."""
    points = sample_omega(rng, samples, margin=2 * h)
    grads = np.empty_like(points)
    for axis in range(3):
        offset = np.zeros(3)
        offset[axis] = h
        plus, minus = points + offset, points - offset
        grads[:, axis] = (
            d_value_arrays(plus[:, 0], plus[:, 1], plus[:, 2]) - d_value_arrays(minus[:, 0], minus[:, 1], minus[:, 2])
        ) / (2 * h)
    norms = np.nanmax(np.abs(grads), axis=1)
    k = int(np.nanargmax(norms))
    return GradientEstimate(float(norms[k]), tuple(float(x) for x in points[k]), int(points.shape[0]))


def grid_dump(step: float = math.pi / 32) -> list[tuple[float, float, float, float, float]]:
    """Rows (θ₀, θ₁, θ, D, Q) on a coarse grid of Ω; Q is NaN at the origin."""
    axis = np.arange(0.0, OMEGA_RADIUS + 1e-12, step)
    t0, t1, th = (grid.ravel() for grid in np.meshgrid(axis, axis, axis[axis <= math.pi], indexing="ij"))
    keep = in_omega_arrays(t0, t1, th)
    t0, t1, th = t0[keep], t1[keep], th[keep]
    tilde00, tilde01 = theta_tilde_arrays(t0, t1, th)
    sigma2 = t0 * t0 + t1 * t1
    d = 0.9 * sigma2 - tilde00**2 - tilde01**2
    with np.errstate(invalid="ignore", divide="ignore"):
        q = np.where(sigma2 > 0, (tilde00**2 + tilde01**2) / np.where(sigma2 > 0, sigma2, 1.0), np.nan)
    return [tuple(float(x) for x in row) for row in np.column_stack([t0, t1, th, d, q])]
