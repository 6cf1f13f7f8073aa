# hermite_bezier/services/subdivision/schemes.py
"""Single refinement steps: interpolatory insertion and Lane-Riesenfeld smoothing."""

from __future__ import annotations

import numpy as np
import numpy.typing as npt

from hermite_bezier.domain.enums import AlphaVariant, Topology
from hermite_bezier.services.bezier_average import midpoint_average_arrays
from hermite_bezier.services.exceptions import ParameterError
from hermite_bezier.services.geometry import HermiteSequence


def _interleave(even: np.ndarray, odd: np.ndarray) -> np.ndarray:
    out = np.empty((even.shape[0] + odd.shape[0], even.shape[1]), dtype=np.float64)
    out[0::2] = even
    out[1::2] = odd
    return out


def ihb_step(s: HermiteSequence, variant: AlphaVariant = AlphaVariant.paper) -> HermiteSequence:
    """Keep every pair and insert the midpoint average between neighbours (2N-1 open, 2N closed)."""
    p0, v0, p1, v1 = s.consecutive()
    points, tangents = midpoint_average_arrays(p0, v0, p1, v1, variant)
    return HermiteSequence(_interleave(s.points, points), _interleave(s.tangents, tangents), s.topology)


def _check_rounds(m: int) -> None:
    if m < 1:
        raise ParameterError(f"Lane-Riesenfeld order must be >= 1, got {m}.", m=m)


def _clamp(values: np.ndarray, first: np.ndarray, last: np.ndarray) -> np.ndarray:
    """Re-attach the original open endpoints if a smoothing round moved them."""
    if not np.array_equal(values[0], first):
        values = np.vstack([first, values])
    if not np.array_equal(values[-1], last):
        values = np.vstack([values, last])
    return values


def hb_lr_step(s: HermiteSequence, m: int, variant: AlphaVariant = AlphaVariant.paper) -> HermiteSequence:
    """Duplicate every pair, then run ``m`` rounds averaging neighbours with the midpoint average.

    Duplicated neighbours average to themselves, so the first round is an
    interpolatory insertion.  Closed sequences are smoothed cyclically; open
    sequences keep their end pairs (clamp policy).
    """
    _check_rounds(m)
    closed = s.topology is Topology.closed
    points = np.repeat(s.points, 2, axis=0)
    tangents = np.repeat(s.tangents, 2, axis=0)
    first = np.concatenate([s.points[0], s.tangents[0]])
    last = np.concatenate([s.points[-1], s.tangents[-1]])
    dim = s.dimension

    for round_number in range(1, m + 1):
        if closed:
            nxt_p, nxt_v = np.roll(points, -1, axis=0), np.roll(tangents, -1, axis=0)
            points, tangents = midpoint_average_arrays(
                points, tangents, nxt_p, nxt_v, variant, round=round_number
            )
        else:
            points, tangents = midpoint_average_arrays(
                points[:-1], tangents[:-1], points[1:], tangents[1:], variant, round=round_number
            )
            stacked = _clamp(np.hstack([points, tangents]), first, last)
            points, tangents = stacked[:, :dim], stacked[:, dim:]

    return HermiteSequence(points, tangents, s.topology)


def linear_lr_step(points: npt.ArrayLike, m: int, closed: bool = False) -> np.ndarray:
    """Classical Lane-Riesenfeld step of order ``m`` on points only."""
    _check_rounds(m)
    original = np.asarray(points, dtype=np.float64)
    if original.ndim != 2 or original.shape[0] < 2:
        raise ParameterError("Linear Lane-Riesenfeld refinement needs at least 2 points.")
    values = np.repeat(original, 2, axis=0)
    for _ in range(m):
        if closed:
            values = 0.5 * (values + np.roll(values, -1, axis=0))
        else:
            values = _clamp(0.5 * (values[:-1] + values[1:]), original[0], original[-1])
    return values
