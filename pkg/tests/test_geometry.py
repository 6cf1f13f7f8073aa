# tests/test_geometry.py
import math

import numpy as np
import pytest

from hermite_bezier.domain.enums import DirectionStatus, Topology
from hermite_bezier.services.exceptions import (
    CoincidentPointsError,
    DataFormatError,
    DomainValidationError,
)
from hermite_bezier.services.geometry import (
    HermitePair,
    HermiteSequence,
    angles_between,
    check_admissible,
    max_gap,
    pair_geometry,
    pair_geometry_arrays,
    sigma_sup,
)


# ---------- tipos ----------

def test_pair_normalizes_tangent_with_of():
    pair = HermitePair.of((1.0, 2.0), (3.0, 4.0))
    assert np.allclose(pair.tangent, [0.6, 0.8])
    assert pair.dimension == 2


def test_pair_rejects_non_unit_tangent_and_dimension_mismatch():
    with pytest.raises(DomainValidationError):
        HermitePair((0.0, 0.0), (2.0, 0.0))
    with pytest.raises(DomainValidationError):
        HermitePair.of((0.0, 0.0, 0.0), (1.0, 0.0))


def test_sequence_rejects_consecutive_duplicates_with_index():
    with pytest.raises(CoincidentPointsError) as exc:
        HermiteSequence.from_arrays([[0, 0], [1, 0], [1, 0]], [[1, 0], [1, 0], [1, 0]])
    assert exc.value.context["index"] == 1


def test_closed_sequence_checks_wrap_around_pair():
    points = [[0, 0], [1, 0], [0, 0]]
    tangents = [[1, 0], [1, 0], [1, 0]]
    HermiteSequence.from_arrays(points[:2] + [[2, 0]], tangents, Topology.closed)
    with pytest.raises(CoincidentPointsError):
        HermiteSequence.from_arrays(points, tangents, Topology.closed)


def test_sequence_shape_errors():
    with pytest.raises(DataFormatError):
        HermiteSequence.from_arrays([[0, 0]], [[1, 0]])
    with pytest.raises(DataFormatError):
        HermiteSequence.from_arrays([[0, 0], [1, 0]], [[0, 0], [1, 0]])
    with pytest.raises(DataFormatError):
        HermiteSequence.from_arrays([[0, 0], [1, math.nan]], [[1, 0], [1, 0]])


def test_pair_indices_respect_topology(circle_data):
    left, right = circle_data.pair_indices()
    assert left.tolist() == [0, 1, 2, 3]
    assert right.tolist() == [1, 2, 3, 0]
    opened = HermiteSequence(circle_data.points, circle_data.tangents, Topology.open)
    assert opened.pair_indices()[1].tolist() == [1, 2, 3]


# ---------- geometría del par ----------

def test_pair_geometry_direction():
    g = pair_geometry(HermitePair.of((0, 0), (1, 0)), HermitePair.of((3, 4), (0, 1)))
    assert np.allclose(g.u, [0.6, 0.8])
    assert g.distance == pytest.approx(5.0)


def test_pair_geometry_aligned_is_zero():
    g = pair_geometry(HermitePair.of((0, 0), (1, 0)), HermitePair.of((1, 0), (1, 0)))
    assert g.theta == g.theta0 == g.theta1 == g.sigma == 0.0


def test_pair_geometry_quarter_circle(quarter_circle_pair):
    g = pair_geometry(*quarter_circle_pair)
    assert g.theta0 == pytest.approx(math.pi / 4, abs=1e-12)
    assert g.theta1 == pytest.approx(math.pi / 4, abs=1e-12)
    assert g.theta == pytest.approx(math.pi / 2, abs=1e-12)
    assert g.sigma == pytest.approx(1.11072, abs=1e-5)


def test_pair_geometry_coincident_points():
    with pytest.raises(CoincidentPointsError):
        pair_geometry(HermitePair.of((1, 1), (1, 0)), HermitePair.of((1, 1), (0, 1)))


def test_random_angles_obey_triangle_inequality_and_sigma(rng):
    n = 2000
    p0 = rng.standard_normal((n, 4))
    p1 = p0 + rng.standard_normal((n, 4))
    v0 = rng.standard_normal((n, 4))
    v1 = rng.standard_normal((n, 4))
    v0 /= np.linalg.norm(v0, axis=1)[:, None]
    v1 /= np.linalg.norm(v1, axis=1)[:, None]
    g = pair_geometry_arrays(p0, v0, p1, v1)
    assert np.all(np.abs(g["theta0"] - g["theta1"]) <= g["theta"] + 1e-12)
    assert np.all(g["theta"] <= g["theta0"] + g["theta1"] + 1e-12)
    assert np.allclose(g["sigma"] ** 2, g["theta0"] ** 2 + g["theta1"] ** 2, atol=1e-12)

    # reversal keeps the angle between the tangents
    reversed_g = pair_geometry_arrays(p1, -v1, p0, -v0)
    assert np.allclose(reversed_g["theta"], g["theta"], atol=1e-12)
    assert np.allclose(angles_between(v0, v1), g["theta"])


# ---------- admisibilidad ----------

def test_admissible_aligned():
    report = check_admissible(HermitePair.of((0, 0), (1, 0)), HermitePair.of((1, 0), (1, 0)))
    assert report.direction_status is DirectionStatus.aligned
    assert report.acute_sufficient
    assert report.planar_degeneracy_roots == []
    assert report.admissible


def test_admissible_quarter_circle(quarter_circle_pair):
    report = check_admissible(*quarter_circle_pair)
    assert report.direction_status is DirectionStatus.pairwise_independent
    # θ = π/2 sits on the boundary of the strict acute condition
    assert not report.acute_sufficient
    assert report.reason == "admissible"


def test_acute_condition_on_sixty_degree_arc():
    a = HermitePair.of((1.0, 0.0), (0.0, 1.0))
    b = HermitePair.of((0.5, math.sqrt(3) / 2), (-math.sqrt(3) / 2, 0.5))
    report = check_admissible(a, b)
    # 3cos²(π/12)cos(π/6) − 1 − cos(π/3) ≈ 0.924 > 0
    assert report.acute_sufficient
    assert report.admissible


def test_degenerate_when_all_collinear():
    report = check_admissible(HermitePair.of((0, 0), (1, 0)), HermitePair.of((1, 0), (-1, 0)))
    assert report.direction_status is DirectionStatus.degenerate
    assert not report.admissible
    assert "collinear" in report.reason


def test_single_parallel_pair_is_admissible():
    # semicircle: v0 = -v1, u independent of both
    report = check_admissible(HermitePair.of((0, 0), (0, 1)), HermitePair.of((1, 0), (0, -1)))
    assert report.direction_status is DirectionStatus.single_dependency
    assert report.admissible


def test_coincident_points_report():
    report = check_admissible(HermitePair.of((0, 0), (1, 0)), HermitePair.of((0, 0), (0, 1)))
    assert not report.points_distinct
    assert report.reason == "points coincide"


@pytest.mark.parametrize("phi", [0.3, 1.0, math.pi / 2, 2.5])
def test_cocircular_arcs_are_pairwise_independent(phi):
    a = HermitePair.of((1.0, 0.0), (0.0, 1.0))
    b = HermitePair.of((math.cos(phi), math.sin(phi)), (-math.sin(phi), math.cos(phi)))
    assert check_admissible(a, b).direction_status is DirectionStatus.pairwise_independent


# ---------- cantidades de secuencia ----------

def test_sigma_sup_examples(circle_data):
    line = HermiteSequence.from_arrays([[0, 0], [1, 0], [2, 0]], [[1, 0]] * 3)
    assert sigma_sup(line) == 0.0
    assert sigma_sup(circle_data) == pytest.approx(math.pi * math.sqrt(2) / 4, abs=1e-12)


def test_max_gap_open_and_closed():
    points = [[0, 0], [1, 0], [3, 0]]
    tangents = [[1, 0]] * 3
    assert max_gap(HermiteSequence.from_arrays(points, tangents)) == pytest.approx(2.0)
    assert max_gap(HermiteSequence.from_arrays(points, tangents, Topology.closed)) == pytest.approx(3.0)
    assert max_gap(HermiteSequence.from_arrays([[0, 0], [0, 4]], [[0, 1]] * 2)) == pytest.approx(4.0)


def test_sequence_from_pairs(quarter_circle_pair):
    data = HermiteSequence.from_pairs(list(quarter_circle_pair))
    assert len(data) == 2
    assert np.array_equal(data[1].point, quarter_circle_pair[1].point)
    with pytest.raises(DataFormatError):
        HermiteSequence.from_pairs([quarter_circle_pair[0], HermitePair.of((0, 0, 0), (1, 0, 0))])
