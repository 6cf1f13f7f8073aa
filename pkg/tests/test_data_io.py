# tests/test_data_io.py
import json
import xml.etree.ElementTree as ET

import numpy as np
import pytest

from hermite_bezier.domain.enums import Topology
from hermite_bezier.services.data_io import (
    dumps_json,
    read_hermite,
    read_points,
    write_hermite,
    write_order_csv,
    write_trace_csv,
)
from hermite_bezier.services.exceptions import CoincidentPointsError, DataFormatError, ParameterError
from hermite_bezier.services.svg_export import SVG_NS, polylines_to_svg, write_svg


# ---------- datos de Hermite ----------

def test_json_keeps_topology_and_values(circle_data, tmp_json):
    write_hermite(tmp_json, circle_data)
    payload = json.loads(tmp_json.read_text(encoding="utf-8"))
    assert payload["topology"] == "closed"
    assert payload["dimension"] == 2
    loaded = read_hermite(tmp_json)
    assert loaded.is_closed
    assert np.array_equal(loaded.points, circle_data.points)
    assert np.allclose(loaded.tangents, circle_data.tangents, atol=1e-15)


def test_csv_takes_topology_from_caller(line_data, tmp_path):
    path = tmp_path / "line.csv"
    write_hermite(path, line_data)
    assert path.read_text(encoding="utf-8").splitlines()[0] == "p0,p1,v0,v1"
    assert read_hermite(path).topology is Topology.open
    assert read_hermite(path, "closed").topology is Topology.closed


def test_json_tangents_are_normalized(tmp_json):
    tmp_json.write_text(
        json.dumps({"dimension": 2, "samples": [{"point": [0, 0], "tangent": [3, 4]}, {"point": [1, 0], "tangent": [1, 0]}]}),
        encoding="utf-8",
    )
    data = read_hermite(tmp_json)
    assert np.allclose(data.tangents[0], [0.6, 0.8])


@pytest.mark.parametrize(
    "payload",
    [
        {"dimension": 2, "samples": [{"point": [0, 0], "tangent": [1, 0]}]},
        {"dimension": 3, "samples": [{"point": [0, 0], "tangent": [1, 0]}, {"point": [1, 0], "tangent": [1, 0]}]},
        {"dimension": 2, "samples": [{"point": [0, 0], "tangent": [0, 0]}, {"point": [1, 0], "tangent": [1, 0]}]},
    ],
)
def test_invalid_json_is_a_format_error(tmp_json, payload):
    tmp_json.write_text(json.dumps(payload), encoding="utf-8")
    with pytest.raises(DataFormatError):
        read_hermite(tmp_json)


def test_csv_format_errors(tmp_path):
    empty = tmp_path / "empty.csv"
    empty.write_text("", encoding="utf-8")
    odd = tmp_path / "odd.csv"
    odd.write_text("x,y,z\n0,0,0\n1,0,0\n", encoding="utf-8")
    text = tmp_path / "text.csv"
    text.write_text("p0,p1,v0,v1\n0,0,1,a\n", encoding="utf-8")
    for path in (empty, odd, text):
        with pytest.raises(DataFormatError):
            read_hermite(path)


def test_csv_duplicates_are_reported(tmp_path):
    path = tmp_path / "dup.csv"
    path.write_text("p0,p1,v0,v1\n0,0,1,0\n0,0,1,0\n", encoding="utf-8")
    with pytest.raises(CoincidentPointsError):
        read_hermite(path)


def test_read_points(tmp_path):
    path = tmp_path / "points.csv"
    path.write_text("x,y\n0,0\n1,0\n1,1\n", encoding="utf-8")
    assert read_points(path).shape == (3, 2)
    single = tmp_path / "single.csv"
    single.write_text("x\n0\n1\n", encoding="utf-8")
    with pytest.raises(DataFormatError):
        read_points(single)


# ---------- reportes ----------

def test_csv_reports_use_round_trip_floats(tmp_path):
    trace = tmp_path / "trace.csv"
    write_trace_csv(trace, [(0, 0.1, 1.0, None), (1, 0.05, 0.5, 0.01)])
    lines = trace.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "level,sigma_sup,max_gap,tangent_drift"
    assert lines[1] == "0,0.1,1.0,"
    order = tmp_path / "order.csv"
    write_order_csv(order, [(0.5, 1e-3, -0.30102999566398114, -3.0)])
    assert order.read_text(encoding="utf-8").splitlines()[1] == "0.5,0.001,-0.30102999566398114,-3.0"


def test_dumps_json_is_stable():
    assert dumps_json({"a": 1}) == dumps_json({"a": 1})
    assert dumps_json({"a": 1}).endswith("\n")


# ---------- SVG ----------

def test_svg_flips_y_axis():
    tree = polylines_to_svg([np.array([[0.0, 0.0], [1.0, 2.0]])], margin_fraction=0.0)
    root = tree.getroot()
    assert [float(x) for x in root.get("viewBox").split()] == [0.0, -2.0, 1.0, 2.0]
    path = root.find(f"{{{SVG_NS}}}path")
    assert path.get("d") == "M 0.0,-0.0 L 1.0,-2.0"


def test_svg_closed_paths_and_colors(tmp_path, circle_data):
    out = tmp_path / "circle.svg"
    write_svg(out, [circle_data.points, circle_data.points * 2], closed=[True, False])
    paths = ET.parse(out).getroot().findall(f"{{{SVG_NS}}}path")
    assert len(paths) == 2
    assert paths[0].get("d").endswith(" Z")
    assert not paths[1].get("d").endswith(" Z")
    assert paths[0].get("stroke") != paths[1].get("stroke")


def test_svg_rejects_non_planar_data():
    with pytest.raises(ParameterError):
        polylines_to_svg([np.zeros((3, 3))])
    with pytest.raises(ParameterError):
        polylines_to_svg([])
