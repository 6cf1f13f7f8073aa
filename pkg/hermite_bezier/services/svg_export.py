# hermite_bezier/services/svg_export.py
from __future__ import annotations

import xml.etree.ElementTree as ET
from pathlib import Path
from typing import Sequence

import numpy as np

from hermite_bezier.services.exceptions import ParameterError

SVG_NS = "http://www.w3.org/2000/svg"
STROKE_FRACTION = 0.005
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd")


def _path_data(points: np.ndarray, closed: bool) -> str:
    # SVG's y axis points down
    coords = [f"{x!r},{-y!r}" for x, y in points.tolist()]
    data = "M " + " L ".join(coords)
    return data + " Z" if closed else data


def polylines_to_svg(
    polylines: Sequence[np.ndarray],
    closed: Sequence[bool] | None = None,
    margin_fraction: float = 0.02,
) -> ET.ElementTree:
    """One <path> per polyline inside a viewBox fitted to their bounding box."""
    arrays = [np.asarray(p, dtype=np.float64) for p in polylines]
    if not arrays:
        raise ParameterError("Nothing to draw.")
    for array in arrays:
        if array.ndim != 2 or array.shape[1] != 2:
            raise ParameterError("SVG export is restricted to planar (2D) data.")
    closed = list(closed) if closed is not None else [False] * len(arrays)

    stacked = np.vstack(arrays)
    lo = [float(x) for x in stacked.min(axis=0)]
    hi = [float(x) for x in stacked.max(axis=0)]
    extent = float(max(hi[0] - lo[0], hi[1] - lo[1], 1e-12))
    margin = margin_fraction * extent
    stroke = STROKE_FRACTION * extent

    ET.register_namespace("", SVG_NS)
    root = ET.Element(
        f"{{{SVG_NS}}}svg",
        {
            "viewBox": f"{lo[0] - margin!r} {-hi[1] - margin!r} {hi[0] - lo[0] + 2 * margin!r} {hi[1] - lo[1] + 2 * margin!r}",
            "width": "800",
            "height": "800",
        },
    )
    for index, (array, is_closed) in enumerate(zip(arrays, closed)):
        ET.SubElement(
            root,
            f"{{{SVG_NS}}}path",
            {
                "d": _path_data(array, is_closed),
                "fill": "none",
                "stroke": PALETTE[index % len(PALETTE)],
                "stroke-width": repr(stroke),
            },
        )
    return ET.ElementTree(root)


def write_svg(path: str | Path, polylines: Sequence[np.ndarray], closed: Sequence[bool] | None = None) -> None:
    tree = polylines_to_svg(polylines, closed)
    tree.write(str(path), encoding="utf-8", xml_declaration=True)
