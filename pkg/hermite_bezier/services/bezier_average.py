"""Bezier average of two Hermite pairs.

The average of ``a = (p0, v0)`` and ``b = (p1, v1)`` at weight ``w`` is the point
and normalized derivative at ``t = w`` of the cubic with control points
``p0, p0 + α v0, p1 − α v1, p1``.  The midpoint has a closed form that the
refinement schemes use as their hot path; ``midpoint_average_arrays`` evaluates
it over stacks of pairs at once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from hermite_bezier.core.config import settings
from hermite_bezier.core.metrics import record_averages
from hermite_bezier.domain.enums import AlphaVariant
from hermite_bezier.services.exceptions import (
    DegenerateAnglesError,
    InadmissiblePairError,
    OutOfRangeError,
    VanishingTangentError,
)
from hermite_bezier.services.geometry import (
    HermitePair,
    PairGeometry,
    Vec,
    check_admissible,
    classify_directions,
    pair_geometry,
)


@dataclass(frozen=True)
class BezierSegment:
    q0: Vec
    q1: Vec
    q2: Vec
    q3: Vec
    alpha: float

    @property
    def control_points(self) -> Vec:
        return np.stack([self.q0, self.q1, self.q2, self.q3])

    def to_dict(self) -> dict:
        return {"q": self.control_points.tolist(), "alpha": self.alpha}


def _alpha_denominator(theta: float, theta0: float, theta1: float, variant: AlphaVariant) -> float:
    half_angle = (theta0 + theta1) / 4 if AlphaVariant(variant) is AlphaVariant.paper else theta / 4
    return 3 * math.cos(half_angle) ** 2


def alpha(g: PairGeometry, dist: float, variant: AlphaVariant = AlphaVariant.paper) -> float:
    """Tangent length of the inner control points."""
    if not dist > 0:
        raise OutOfRangeError("Pair distance must be positive.", distance=dist)
    denominator = _alpha_denominator(g.theta, g.theta0, g.theta1, variant)
    if denominator < settings.DENOMINATOR_TOLERANCE:
        raise DegenerateAnglesError(
            "α denominator vanishes; θ₀+θ₁ (or θ) too close to 2π.",
            theta0=g.theta0,
            theta1=g.theta1,
            theta=g.theta,
        )
    return dist / denominator


def _require_admissible(a: HermitePair, b: HermitePair, **context) -> None:
    report = check_admissible(a, b)
    if not report.admissible:
        raise InadmissiblePairError(f"Inadmissible pair: {report.reason}.", report.reason, **context)


def segment(a: HermitePair, b: HermitePair, variant: AlphaVariant = AlphaVariant.paper) -> BezierSegment:
    _require_admissible(a, b)
    g = pair_geometry(a, b)
    length = alpha(g, g.distance, variant)
    return BezierSegment(
        q0=a.point,
        q1=a.point + length * a.tangent,
        q2=b.point - length * b.tangent,
        q3=b.point,
        alpha=length,
    )


def evaluate(seg: BezierSegment, t: float) -> tuple[Vec, Vec]:
    """Point and derivative at ``t`` by De Casteljau."""
    if not 0.0 <= t <= 1.0:
        raise OutOfRangeError(f"Bezier parameter {t} outside [0, 1].", t=t)
    r0 = seg.q0 + t * (seg.q1 - seg.q0)
    r1 = seg.q1 + t * (seg.q2 - seg.q1)
    r2 = seg.q2 + t * (seg.q3 - seg.q2)
    s0 = r0 + t * (r1 - r0)
    s1 = r1 + t * (r2 - r1)
    return s0 + t * (s1 - s0), 3.0 * (s1 - s0)


def eval_polynomial(seg: BezierSegment, t: float) -> tuple[Vec, Vec]:
    """Bernstein form of the same point and derivative, kept as a cross-check of ``evaluate``."""
    s = 1.0 - t
    point = s**3 * seg.q0 + 3 * s * s * t * seg.q1 + 3 * s * t * t * seg.q2 + t**3 * seg.q3
    derivative = 3 * (s * s * (seg.q1 - seg.q0) + 2 * s * t * (seg.q2 - seg.q1) + t * t * (seg.q3 - seg.q2))
    return point, derivative


def split_segment(seg: BezierSegment, t: float = 0.5) -> tuple[BezierSegment, BezierSegment]:
    """De Casteljau subdivision of the cubic at ``t`` into its two halves."""
    if not 0.0 < t < 1.0:
        raise OutOfRangeError(f"Split parameter {t} outside (0, 1).", t=t)
    r0 = seg.q0 + t * (seg.q1 - seg.q0)
    r1 = seg.q1 + t * (seg.q2 - seg.q1)
    r2 = seg.q2 + t * (seg.q3 - seg.q2)
    s0 = r0 + t * (r1 - r0)
    s1 = r1 + t * (r2 - r1)
    middle = s0 + t * (s1 - s0)
    left = BezierSegment(seg.q0, r0, s0, middle, float(np.linalg.norm(r0 - seg.q0)))
    right = BezierSegment(middle, s1, r2, seg.q3, float(np.linalg.norm(seg.q3 - r2)))
    return left, right


def average(
    a: HermitePair, b: HermitePair, w: float, variant: AlphaVariant = AlphaVariant.paper
) -> HermitePair:
    """Weighted Bezier average; exact at the endpoints ``w = 0`` and ``w = 1``."""
    if not 0.0 <= w <= 1.0:
        raise OutOfRangeError(f"Weight {w} outside [0, 1].", w=w)
    seg = segment(a, b, variant)
    if w == 0.0:
        return a
    if w == 1.0:
        return b
    point, derivative = evaluate(seg, w)
    norm = float(np.linalg.norm(derivative))
    scale = 1.0 + float(np.linalg.norm(b.point - a.point))
    if norm < settings.VANISHING_TANGENT_TOLERANCE * scale:
        raise VanishingTangentError(
            f"Bezier derivative vanishes at w={w}; the pair is outside the admissible set for this weight.",
            w=w,
        )
    record_averages("bezier")
    return HermitePair(point, derivative / norm)


def midpoint_average(
    a: HermitePair, b: HermitePair, variant: AlphaVariant = AlphaVariant.paper
) -> HermitePair:
    """Closed-form average at ``w = 1/2``; identical operands average to themselves."""
    if np.array_equal(a.point, b.point) and np.array_equal(a.tangent, b.tangent):
        return a
    points, tangents = midpoint_average_arrays(
        a.point[None, :], a.tangent[None, :], b.point[None, :], b.tangent[None, :], variant
    )
    return HermitePair(points[0], tangents[0])


def midpoint_average_arrays(
    p0: np.ndarray,
    v0: np.ndarray,
    p1: np.ndarray,
    v1: np.ndarray,
    variant: AlphaVariant = AlphaVariant.paper,
    **context,
) -> tuple[np.ndarray, np.ndarray]:
    """Row-wise midpoint averages of stacked pairs ``(p0[i], v0[i])``, ``(p1[i], v1[i])``.

    Rows whose operands are exactly equal return the operand.  Any other row
    must be admissible; the first offending row raises with its ``index`` (plus
    any ``context`` such as the round number).
    """
    p0, v0, p1, v1 = (np.asarray(x, dtype=np.float64) for x in (p0, v0, p1, v1))
    same = np.all(p0 == p1, axis=1) & np.all(v0 == v1, axis=1)

    diff = p1 - p0
    distance = np.linalg.norm(diff, axis=1)
    coincident = (distance <= settings.POINT_TOLERANCE) & ~same
    if np.any(coincident):
        index = int(np.flatnonzero(coincident)[0])
        raise InadmissiblePairError(
            f"Inadmissible pair at index {index}: points coincide.", "points coincide", index=index, **context
        )

    safe_distance = np.where(same, 1.0, distance)
    u = diff / safe_distance[:, None]
    cos01 = np.einsum("ij,ij->i", v0, v1)
    cos0 = np.einsum("ij,ij->i", v0, u)
    cos1 = np.einsum("ij,ij->i", v1, u)
    theta = np.arccos(np.clip(cos01, -1.0, 1.0))
    theta0 = np.arccos(np.clip(cos0, -1.0, 1.0))
    theta1 = np.arccos(np.clip(cos1, -1.0, 1.0))

    status = classify_directions(theta0, theta1, cos01, cos0, cos1)
    degenerate = (status == 2) & ~same
    if np.any(degenerate):
        index = int(np.flatnonzero(degenerate)[0])
        reason = "v0, v1 and u are collinear without being aligned"
        raise InadmissiblePairError(f"Inadmissible pair at index {index}: {reason}.", reason, index=index, **context)

    half_angle = (theta0 + theta1) / 4 if AlphaVariant(variant) is AlphaVariant.paper else theta / 4
    denominator = 3 * np.cos(half_angle) ** 2
    bad = (denominator < settings.DENOMINATOR_TOLERANCE) & ~same
    if np.any(bad):
        index = int(np.flatnonzero(bad)[0])
        raise DegenerateAnglesError(f"α denominator vanishes at pair {index}.", index=index, **context)
    length = np.where(same, 0.0, distance / np.where(bad | same, 1.0, denominator))

    points = 0.5 * (p0 + p1) + 0.375 * length[:, None] * (v0 - v1)
    derivative = diff - 0.5 * length[:, None] * (v0 + v1)
    norms = np.linalg.norm(derivative, axis=1)
    vanishing = (norms < settings.VANISHING_TANGENT_TOLERANCE * (1.0 + distance)) & ~same
    if np.any(vanishing):
        index = int(np.flatnonzero(vanishing)[0])
        raise VanishingTangentError(f"Midpoint tangent vanishes at pair {index}.", index=index, **context)

    tangents = np.where(same[:, None], v0, derivative / np.where(same, 1.0, norms)[:, None])
    points = np.where(same[:, None], p0, points)

    # rows on a common line reduce to the linear average; the chord direction is
    # left out of the tangent so rounding in short chords does not accumulate
    tol = settings.LINEAR_AVERAGE_TOLERANCE
    linear = (
        (np.linalg.norm(v0 - u, axis=1) <= tol) & (np.linalg.norm(v1 - u, axis=1) <= tol) & ~same
    )
    if np.any(linear):
        summed = v0[linear] + v1[linear]
        tangents[linear] = summed / np.linalg.norm(summed, axis=1)[:, None]
        points[linear] = 0.5 * (p0[linear] + p1[linear])
    record_averages("midpoint", int(p0.shape[0]))
    return points, tangents


def reverse(a: HermitePair) -> HermitePair:
    return HermitePair(a.point, -a.tangent)
