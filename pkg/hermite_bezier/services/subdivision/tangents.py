# hermite_bezier/services/subdivision/tangents.py
from __future__ import annotations

import numpy as np
import numpy.typing as npt

from hermite_bezier.core.config import settings
from hermite_bezier.domain.enums import Topology
from hermite_bezier.services.exceptions import CoincidentPointsError, ParameterError
from hermite_bezier.services.geometry import HermiteSequence
from hermite_bezier.services.subdivision.geodesic import slerp_arrays


def estimate_tangents(points: npt.ArrayLike, topology: Topology | str = Topology.open) -> HermiteSequence:
    """Tangents for point-only data.

    Each interior tangent is the geodesic average of the unit chords entering
    and leaving the point, weighted by the length of the incoming chord over
    the total of both.  Open endpoints take the one-sided chord direction.
    """
    topology = Topology(topology)
    points = np.asarray(points, dtype=np.float64)
    if points.ndim != 2 or points.shape[0] < 3:
        raise ParameterError("Tangent estimation needs at least 3 points.")

    closed = topology is Topology.closed
    following = np.roll(points, -1, axis=0) if closed else points[1:]
    chords = following - (points if closed else points[:-1])
    lengths = np.linalg.norm(chords, axis=1)
    coincident = np.flatnonzero(lengths <= settings.POINT_TOLERANCE)
    if coincident.size:
        index = int(coincident[0])
        raise CoincidentPointsError(f"Consecutive points {index} and {index + 1} coincide.", index=index)
    directions = chords / lengths[:, None]

    if closed:
        incoming, outgoing = np.roll(directions, 1, axis=0), directions
        incoming_len, outgoing_len = np.roll(lengths, 1), lengths
        tangents = slerp_arrays(incoming, outgoing, incoming_len / (incoming_len + outgoing_len))
    else:
        interior = slerp_arrays(
            directions[:-1], directions[1:], lengths[:-1] / (lengths[:-1] + lengths[1:])
        )
        tangents = np.vstack([directions[:1], interior, directions[-1:]])

    return HermiteSequence.from_arrays(points, tangents, topology)
