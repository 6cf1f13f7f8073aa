# hermite_bezier/services/data_io.py
"""Hermite data, traces and reports on disk.

Floats are written with ``repr`` (shortest round-trip form), so identical runs
produce byte-identical files.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Any, Iterable, Sequence

import numpy as np
from pydantic import BaseModel, ValidationError

from hermite_bezier.domain.enums import Topology
from hermite_bezier.schemas.hermite import HermiteDataModel
from hermite_bezier.services.exceptions import DataFormatError
from hermite_bezier.services.geometry import HermiteSequence


def _fmt(value: float | None) -> str:
    if value is None:
        return ""
    return repr(float(value))


def _write_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(x) if isinstance(x, (float, np.floating)) or x is None else x for x in row])


def dumps_json(payload: BaseModel | dict | list) -> str:
    if isinstance(payload, BaseModel):
        payload = payload.model_dump(mode="json")
    return json.dumps(payload, indent=2, allow_nan=True) + "\n"


def write_json(path: str | Path, payload: BaseModel | dict | list) -> None:
    Path(path).write_text(dumps_json(payload), encoding="utf-8")


# --- Hermite data ---

def sequence_to_model(sequence: HermiteSequence) -> HermiteDataModel:
    return HermiteDataModel(
        dimension=sequence.dimension,
        topology=sequence.topology,
        samples=[
            {"point": point.tolist(), "tangent": tangent.tolist()}
            for point, tangent in zip(sequence.points, sequence.tangents)
        ],
    )


def model_to_sequence(model: HermiteDataModel) -> HermiteSequence:
    return HermiteSequence.from_arrays(
        [sample.point for sample in model.samples],
        [sample.tangent for sample in model.samples],
        model.topology,
    )


def _read_hermite_json(path: Path) -> HermiteSequence:
    try:
        model = HermiteDataModel.model_validate_json(path.read_text(encoding="utf-8"))
    except ValidationError as exc:
        raise DataFormatError(f"Invalid Hermite data in {path}: {exc.errors()[0]['msg']}", path=str(path)) from exc
    return model_to_sequence(model)


def _read_rows(path: Path) -> tuple[list[str], np.ndarray]:
    with path.open(newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration as exc:
            raise DataFormatError(f"{path} is empty; a header row is required.", path=str(path)) from exc
        rows = [row for row in reader if row]
    try:
        values = np.array([[float(x) for x in row] for row in rows], dtype=np.float64)
    except ValueError as exc:
        raise DataFormatError(f"Non-numeric value in {path}.", path=str(path)) from exc
    if values.ndim != 2 or values.shape[0] == 0 or values.shape[1] != len(header):
        raise DataFormatError(f"{path} rows must all have {len(header)} columns.", path=str(path))
    return header, values


def _read_hermite_csv(path: Path, topology: Topology) -> HermiteSequence:
    header, values = _read_rows(path)
    if len(header) % 2 or len(header) < 4:
        raise DataFormatError(f"{path} needs 2n columns (point then tangent), got {len(header)}.", path=str(path))
    n = len(header) // 2
    return HermiteSequence.from_arrays(values[:, :n], values[:, n:], topology)


def read_hermite(path: str | Path, topology: Topology | str = Topology.open) -> HermiteSequence:
    """Load Hermite data from JSON (topology in the file) or CSV (topology from the caller)."""
    path = Path(path)
    if path.suffix.lower() == ".csv":
        return _read_hermite_csv(path, Topology(topology))
    return _read_hermite_json(path)


def write_hermite(path: str | Path, sequence: HermiteSequence) -> None:
    path = Path(path)
    if path.suffix.lower() == ".csv":
        n = sequence.dimension
        header = [f"p{i}" for i in range(n)] + [f"v{i}" for i in range(n)]
        _write_csv(path, header, np.hstack([sequence.points, sequence.tangents]).tolist())
        return
    write_json(path, sequence_to_model(sequence))


def read_points(path: str | Path) -> np.ndarray:
    """Point-only CSV with a header row, one point per row."""
    _, values = _read_rows(Path(path))
    if values.shape[1] < 2:
        raise DataFormatError("Points need at least 2 coordinates.", path=str(path))
    return values


# --- traces and reports ---

def write_trace_csv(path: str | Path, rows: Iterable[Sequence[Any]]) -> None:
    _write_csv(Path(path), ["level", "sigma_sup", "max_gap", "tangent_drift"], rows)


def write_order_csv(path: str | Path, rows: Iterable[Sequence[float]]) -> None:
    _write_csv(Path(path), ["h", "error", "log_h", "log_error"], rows)


def write_grid_csv(path: str | Path, rows: Iterable[Sequence[float]]) -> None:
    _write_csv(Path(path), ["theta0", "theta1", "theta", "D", "Q"], rows)
