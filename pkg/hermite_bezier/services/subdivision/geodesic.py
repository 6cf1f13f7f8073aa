# hermite_bezier/services/subdivision/geodesic.py
"""Great-circle averaging on the unit sphere and the piecewise geodesic tangent interpolant."""

from __future__ import annotations

import math

import numpy as np

from hermite_bezier.core.config import settings
from hermite_bezier.services.exceptions import AntipodalVectorsError, OutOfRangeError
from hermite_bezier.services.geometry import HermiteSequence, Vec, angle_between, angles_between

_LERP_ANGLE = 1e-9


def geodesic_average(u: Vec, v: Vec, w: float) -> Vec:
    """Point at angular distance ``w * g(u, v)`` from ``u`` on the great circle towards ``v``."""
    if not 0.0 <= w <= 1.0:
        raise OutOfRangeError(f"Geodesic weight {w} outside [0, 1].", w=w)
    angle = angle_between(u, v)
    if angle >= math.pi - settings.ANTIPODAL_TOLERANCE:
        raise AntipodalVectorsError("Unit vectors are (nearly) antipodal; the geodesic is not unique.")
    if w == 0.0:
        return np.asarray(u, dtype=np.float64)
    if w == 1.0:
        return np.asarray(v, dtype=np.float64)
    return slerp_arrays(np.asarray(u)[None, :], np.asarray(v)[None, :], np.array([w]))[0]


def slerp_arrays(u: np.ndarray, v: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Row-wise great-circle interpolation; near-equal rows fall back to normalized lerp."""
    angle = angles_between(u, v)
    antipodal = np.flatnonzero(angle >= math.pi - settings.ANTIPODAL_TOLERANCE)
    if antipodal.size:
        index = int(antipodal[0])
        raise AntipodalVectorsError(f"Unit vectors at row {index} are (nearly) antipodal.", index=index)
    w = np.asarray(w, dtype=np.float64)
    small = angle < _LERP_ANGLE
    sin_angle = np.where(small, 1.0, np.sin(angle))
    s0 = np.where(small, 1.0 - w, np.sin((1.0 - w) * angle) / sin_angle)
    s1 = np.where(small, w, np.sin(w * angle) / sin_angle)
    out = s0[:, None] * u + s1[:, None] * v
    return out / np.linalg.norm(out, axis=1)[:, None]


def _parameter_span(sequence: HermiteSequence, level: int) -> float:
    left, _ = sequence.pair_indices()
    return left.shape[0] * 2.0 ** (-level)


def geodesic_interpolant_arrays(sequence: HermiteSequence, level: int, t: np.ndarray) -> np.ndarray:
    """PG_level evaluated at every parameter in ``t``; knots sit at ``2**-level * j``."""
    t = np.asarray(t, dtype=np.float64)
    span = _parameter_span(sequence, level)
    if np.any(t < 0.0) or np.any(t > span):
        raise OutOfRangeError(f"Parameter outside [0, {span}].", level=level)
    left, right = sequence.pair_indices()
    scaled = t * 2.0**level
    j = np.minimum(np.floor(scaled).astype(np.int64), left.shape[0] - 1)
    w = scaled - j
    return slerp_arrays(sequence.tangents[left[j]], sequence.tangents[right[j]], w)


def geodesic_interpolant(sequence: HermiteSequence, level: int, t: float) -> Vec:
    span = _parameter_span(sequence, level)
    if not 0.0 <= t <= span:
        raise OutOfRangeError(f"Parameter {t} outside [0, {span}].", t=t, level=level)
    left, right = sequence.pair_indices()
    scaled = t * 2.0**level
    j = min(int(math.floor(scaled)), left.shape[0] - 1)
    return geodesic_average(sequence.tangents[left[j]], sequence.tangents[right[j]], scaled - j)


def tangent_drift(coarse: HermiteSequence, fine: HermiteSequence, level: int, samples_per_segment: int = 4) -> float:
    """sup over a parameter grid of the angle between PG_level(coarse) and PG_level+1(fine).

    Both interpolants are compared on a common normalized parameter, which is
    the knot convention itself for interpolatory refinement.
    """
    coarse_span = _parameter_span(coarse, level)
    fine_span = _parameter_span(fine, level + 1)
    fine_segments = fine.pair_indices()[0].shape[0]
    s = np.linspace(0.0, 1.0, samples_per_segment * fine_segments + 1)
    a = geodesic_interpolant_arrays(coarse, level, np.minimum(s * coarse_span, coarse_span))
    b = geodesic_interpolant_arrays(fine, level + 1, np.minimum(s * fine_span, fine_span))
    return float(np.max(angles_between(a, b)))
