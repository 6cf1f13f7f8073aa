# hermite_bezier/services/experiments/distances.py
from __future__ import annotations

import numpy as np
import numpy.typing as npt
from scipy.spatial.distance import cdist

from hermite_bezier.services.exceptions import NonFunctionalInputError, ParameterError
from hermite_bezier.services.experiments.curves import CurveSpec

_CHUNK_ELEMENTS = 1_000_000


def _as_polyline(points: npt.ArrayLike) -> np.ndarray:
    polyline = np.asarray(points, dtype=np.float64)
    if polyline.ndim != 2 or polyline.shape[0] == 0:
        raise ParameterError("A polyline needs at least one vertex given as an (N, n) array.")
    return polyline


def _point_to_polyline(points: np.ndarray, polyline: np.ndarray) -> np.ndarray:
    """Distance from each point to the nearest segment of ``polyline``."""
    if polyline.shape[0] == 1:
        return cdist(points, polyline).min(axis=1)
    start = polyline[:-1]
    edge = polyline[1:] - start
    edge_len2 = np.einsum("ij,ij->i", edge, edge)
    edge_len2 = np.where(edge_len2 > 0, edge_len2, 1.0)

    out = np.empty(points.shape[0])
    rows = max(1, _CHUNK_ELEMENTS // start.shape[0])
    for lo in range(0, points.shape[0], rows):
        chunk = points[lo : lo + rows]
        rel = chunk[:, None, :] - start[None, :, :]
        t = np.clip(np.einsum("ijk,jk->ij", rel, edge) / edge_len2, 0.0, 1.0)
        nearest = rel - t[:, :, None] * edge[None, :, :]
        out[lo : lo + rows] = np.sqrt(np.einsum("ijk,ijk->ij", nearest, nearest).min(axis=1))
    return out


def directed_hausdorff(a: npt.ArrayLike, b: npt.ArrayLike) -> float:
    """sup over the vertices of ``a`` of the distance to the polyline ``b``."""
    return float(_point_to_polyline(_as_polyline(a), _as_polyline(b)).max())


def hausdorff(a: npt.ArrayLike, b: npt.ArrayLike) -> float:
    return max(directed_hausdorff(a, b), directed_hausdorff(b, a))


def functional_error(curve: CurveSpec, approx: npt.ArrayLike) -> float:
    """Largest vertical distance between the vertices of ``approx`` and the graph of ``curve``."""
    polyline = _as_polyline(approx)
    if not curve.is_functional:
        raise NonFunctionalInputError(f"Curve '{curve.kind.value}' is not functional.")
    if polyline.shape[1] != 2:
        raise NonFunctionalInputError("Functional error needs planar polylines.")
    steps = np.diff(polyline[:, 0])
    if np.any(steps < 0):
        index = int(np.flatnonzero(steps < 0)[0])
        raise NonFunctionalInputError(
            f"Polyline is not sorted by its first coordinate at vertex {index + 1}.", index=index + 1
        )
    return float(np.max(np.abs(polyline[:, 1] - curve.graph(polyline[:, 0]))))
