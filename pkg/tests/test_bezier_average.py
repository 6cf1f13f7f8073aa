# tests/test_bezier_average.py
import math

import numpy as np
import pytest

from hermite_bezier.domain.enums import AlphaVariant
from hermite_bezier.services.bezier_average import (
    alpha,
    average,
    eval_polynomial,
    evaluate,
    midpoint_average,
    midpoint_average_arrays,
    reverse,
    segment,
    split_segment,
)
from hermite_bezier.services.exceptions import (
    DegenerateAnglesError,
    InadmissiblePairError,
    OutOfRangeError,
)
from hermite_bezier.services.geometry import HermitePair, PairGeometry, pair_geometry

SQRT2_2 = math.sqrt(2) / 2
CIRCLE_ALPHA = 4 / 3 * math.tan(math.pi / 8)


def _geometry(theta0: float, theta1: float, theta: float) -> PairGeometry:
    return PairGeometry(
        u=np.array([1.0, 0.0]),
        theta=theta,
        theta0=theta0,
        theta1=theta1,
        sigma=math.hypot(theta0, theta1),
        distance=1.0,
    )


def _collinear():
    return HermitePair.of((0, 0), (1, 0)), HermitePair.of((3, 0), (1, 0))


# ---------- α ----------

def test_alpha_examples():
    assert alpha(_geometry(0, 0, 0), 3.0) == pytest.approx(1.0)
    assert alpha(_geometry(math.pi / 2, math.pi / 2, math.pi), 1.0) == pytest.approx(2 / 3)


def test_alpha_circle_arc(quarter_circle_pair):
    g = pair_geometry(*quarter_circle_pair)
    assert alpha(g, g.distance) == pytest.approx(CIRCLE_ALPHA, abs=1e-12)
    # on a circle θ = θ₀ + θ₁, so both rules agree
    assert alpha(g, g.distance, AlphaVariant.lv) == pytest.approx(CIRCLE_ALPHA, abs=1e-12)


def test_alpha_errors():
    with pytest.raises(OutOfRangeError):
        alpha(_geometry(0, 0, 0), 0.0)
    with pytest.raises(DegenerateAnglesError):
        alpha(_geometry(math.pi, math.pi, 0.0), 1.0)


def test_alpha_variants_differ_off_circle():
    g = _geometry(0.3, 0.5, 0.4)
    assert alpha(g, 1.0, AlphaVariant.paper) != pytest.approx(alpha(g, 1.0, AlphaVariant.lv))


# ---------- segmento ----------

def test_segment_collinear_control_points():
    seg = segment(*_collinear())
    assert np.allclose(seg.control_points, [[0, 0], [1, 0], [2, 0], [3, 0]])
    assert seg.alpha == pytest.approx(1.0)


def test_segment_quarter_circle(quarter_circle_pair):
    seg = segment(*quarter_circle_pair)
    assert np.allclose(seg.q1, [1.0, CIRCLE_ALPHA])
    assert np.allclose(seg.q2, [CIRCLE_ALPHA, 1.0])
    assert seg.to_dict()["alpha"] == pytest.approx(CIRCLE_ALPHA)


def test_segment_rejects_degenerate_pair():
    with pytest.raises(InadmissiblePairError) as exc:
        segment(HermitePair.of((0, 0), (1, 0)), HermitePair.of((1, 0), (-1, 0)))
    assert "collinear" in exc.value.reason


# ---------- evaluación ----------

def test_evaluate_endpoints_and_middle():
    seg = segment(*_collinear())
    p, d = evaluate(seg, 0.0)
    assert np.allclose(p, [0, 0]) and np.allclose(d, [3, 0])
    p, d = evaluate(seg, 1.0)
    assert np.allclose(p, [3, 0]) and np.allclose(d, [3, 0])
    p, d = evaluate(seg, 0.5)
    assert np.allclose(p, [1.5, 0]) and d[1] == pytest.approx(0.0) and d[0] > 0


def test_evaluate_matches_bernstein_form(rng):
    a = HermitePair.of(rng.standard_normal(3), rng.standard_normal(3))
    b = HermitePair.of(a.point + rng.uniform(0.5, 2.0, 3), rng.standard_normal(3))
    seg = segment(a, b)
    for t in np.linspace(0.0, 1.0, 11):
        p1, d1 = evaluate(seg, float(t))
        p2, d2 = eval_polynomial(seg, float(t))
        assert np.allclose(p1, p2, atol=1e-12)
        assert np.allclose(d1, d2, atol=1e-12)


def test_evaluate_rejects_parameter_outside_unit_interval():
    with pytest.raises(OutOfRangeError):
        evaluate(segment(*_collinear()), 1.5)


def test_split_segment_halves_share_the_midpoint(quarter_circle_pair):
    seg = segment(*quarter_circle_pair)
    left, right = split_segment(seg)
    mid, _ = evaluate(seg, 0.5)
    assert np.allclose(left.q3, mid) and np.allclose(right.q0, mid)
    assert np.allclose(evaluate(left, 0.5)[0], evaluate(seg, 0.25)[0])


# ---------- promedio ----------

def test_average_is_exact_at_endpoints(quarter_circle_pair):
    a, b = quarter_circle_pair
    assert average(a, b, 0.0) is a
    assert average(a, b, 1.0) is b


def test_average_semicircle_midpoint():
    a = HermitePair.of((0, 0), (0, 1))
    b = HermitePair.of((1, 0), (0, -1))
    m = average(a, b, 0.5)
    assert np.allclose(m.point, [0.5, 0.5])
    assert np.allclose(m.tangent, [1.0, 0.0])


def test_average_reconstructs_circle_midpoint(quarter_circle_pair):
    m = average(*quarter_circle_pair, 0.5)
    assert np.allclose(m.point, [SQRT2_2, SQRT2_2], atol=1e-12)
    assert np.allclose(m.tangent, [-SQRT2_2, SQRT2_2], atol=1e-12)


def test_average_weight_out_of_range(quarter_circle_pair):
    with pytest.raises(OutOfRangeError):
        average(*quarter_circle_pair, -0.1)


def test_average_orientation_symmetry(quarter_circle_pair):
    a, b = quarter_circle_pair
    for w in (0.1, 0.3, 0.5, 0.8):
        forward = average(a, b, w)
        backward = reverse(average(reverse(b), reverse(a), 1 - w))
        assert np.allclose(forward.point, backward.point, atol=1e-12)
        assert np.allclose(forward.tangent, backward.tangent, atol=1e-12)


def test_average_of_line_is_linear():
    a, b = _collinear()
    m = average(a, b, 0.25)
    assert np.allclose(m.tangent, [1, 0])
    assert m.point[1] == pytest.approx(0.0)


# ---------- punto medio ----------

def test_midpoint_collinear():
    m = midpoint_average(*_collinear())
    assert np.allclose(m.point, [1.5, 0]) and np.allclose(m.tangent, [1, 0])


def test_midpoint_of_identical_operands_is_the_operand():
    a = HermitePair.of((1, 2), (0, 1))
    assert midpoint_average(a, a) is a


def test_midpoint_agrees_with_average_in_3d(rng):
    a = HermitePair.of((0, 0, 0), (0, 1, 0))
    b = HermitePair.of((1, 0, 1), rng.standard_normal(3))
    fast = midpoint_average(a, b)
    slow = average(a, b, 0.5)
    assert np.allclose(fast.point, slow.point, atol=1e-12)
    assert np.allclose(fast.tangent, slow.tangent, atol=1e-12)


def test_midpoint_arrays_report_offending_row():
    p0 = np.array([[0.0, 0.0], [0.0, 0.0]])
    v0 = np.array([[1.0, 0.0], [1.0, 0.0]])
    p1 = np.array([[1.0, 1.0], [1.0, 0.0]])
    v1 = np.array([[0.0, 1.0], [-1.0, 0.0]])
    with pytest.raises(InadmissiblePairError) as exc:
        midpoint_average_arrays(p0, v0, p1, v1, round=2)
    assert exc.value.context["index"] == 1
    assert exc.value.context["round"] == 2


def test_midpoint_children_stay_admissible(rng):
    from hermite_bezier.services.geometry import check_admissible

    for _ in range(50):
        a = HermitePair.of(rng.standard_normal(3), rng.standard_normal(3))
        b = HermitePair.of(a.point + rng.standard_normal(3), rng.standard_normal(3))
        m = midpoint_average(a, b)
        assert check_admissible(a, m).admissible
        assert check_admissible(m, b).admissible


def test_reverse_is_an_involution():
    a = HermitePair.of((0, 0), (1, 0))
    assert np.allclose(reverse(a).tangent, [-1, 0])
    twice = reverse(reverse(a))
    assert np.array_equal(twice.point, a.point) and np.array_equal(twice.tangent, a.tangent)


# ---------- propiedades ----------

@pytest.mark.parametrize("t", [1e-3, 1e-6])
@pytest.mark.parametrize("w", [0.0, 0.25, 0.5, 0.9])
def test_limit_diagonal(t, w):
    v = np.array([0.6, 0.8])
    a = HermitePair.of((1.0, -1.0), v)
    b = HermitePair.of(a.point + t * v, v)
    m = average(a, b, w)
    deviation = max(np.linalg.norm(m.point - a.point), np.linalg.norm(m.tangent - a.tangent))
    assert deviation <= t * (1 + abs(w))


def test_random_cocircular_midpoints_stay_on_circle(rng):
    from hermite_bezier.services.experiments.transforms import random_similarity

    for dimension in (2, 3):
        for _ in range(100):
            phi0 = rng.uniform(0, 2 * math.pi)
            phi = rng.uniform(0.1, 2 * math.pi - 0.3)
            radius = rng.uniform(0.5, 5.0)
            start, end = phi0, phi0 + phi
            pad = [0.0] * (dimension - 2)
            a = HermitePair.of([radius * math.cos(start), radius * math.sin(start), *pad], [-math.sin(start), math.cos(start), *pad])
            b = HermitePair.of([radius * math.cos(end), radius * math.sin(end), *pad], [-math.sin(end), math.cos(end), *pad])
            transform = random_similarity(rng, dimension)
            a = HermitePair.of(transform.apply_points(a.point), transform.apply_tangents(a.tangent))
            b = HermitePair.of(transform.apply_points(b.point), transform.apply_tangents(b.tangent))
            m = midpoint_average(a, b)

            center = transform.translation
            r = radius * transform.scale
            offset = m.point - center
            assert np.linalg.norm(offset) == pytest.approx(r, abs=1e-10 * (1 + r))
            assert abs(np.dot(offset, m.tangent)) <= 1e-10 * (1 + r)


def test_average_commutes_with_similarities(rng):
    from hermite_bezier.services.experiments.transforms import random_similarity

    for dimension in (2, 3, 5):
        transform = random_similarity(rng, dimension)
        a = HermitePair.of(rng.standard_normal(dimension), rng.standard_normal(dimension))
        b = HermitePair.of(a.point + rng.standard_normal(dimension), rng.standard_normal(dimension))
        moved_a = HermitePair.of(transform.apply_points(a.point), transform.apply_tangents(a.tangent))
        moved_b = HermitePair.of(transform.apply_points(b.point), transform.apply_tangents(b.tangent))
        for w in (0.25, 0.5, 0.75):
            expected = average(a, b, w)
            got = average(moved_a, moved_b, w)
            scale = 1 + transform.scale + float(np.max(np.abs(transform.translation)))
            assert np.allclose(got.point, transform.apply_points(expected.point), atol=1e-10 * scale)
            assert np.allclose(got.tangent, transform.apply_tangents(expected.tangent), atol=1e-10)


# ---------- propiedades a escala ----------

def _random_pairs(rng, n: int, dimension: int = 3):
    p0 = rng.standard_normal((n, dimension))
    p1 = p0 + rng.standard_normal((n, dimension)) * rng.uniform(0.1, 3.0, (n, 1))
    v0 = rng.standard_normal((n, dimension))
    v1 = rng.standard_normal((n, dimension))
    v0 /= np.linalg.norm(v0, axis=1)[:, None]
    v1 /= np.linalg.norm(v1, axis=1)[:, None]
    return p0, v0, p1, v1


@pytest.mark.parametrize("dimension", [2, 3])
def test_midpoint_orientation_symmetry_on_random_pairs(rng, dimension):
    p0, v0, p1, v1 = _random_pairs(rng, 10_000, dimension)
    points, tangents = midpoint_average_arrays(p0, v0, p1, v1)
    back_points, back_tangents = midpoint_average_arrays(p1, -v1, p0, -v0)
    scale = 1 + np.linalg.norm(p1 - p0, axis=1)
    assert np.all(np.linalg.norm(points - back_points, axis=1) <= 1e-12 * scale)
    assert np.all(np.linalg.norm(tangents + back_tangents, axis=1) <= 1e-12)


def test_closed_form_matches_de_casteljau_on_random_pairs(rng):
    n = 10_000
    p0, v0, p1, v1 = _random_pairs(rng, n)
    points, tangents = midpoint_average_arrays(p0, v0, p1, v1)
    for i in range(n):
        seg = segment(HermitePair(p0[i], v0[i]), HermitePair(p1[i], v1[i]))
        point, derivative = evaluate(seg, 0.5)
        distance = float(np.linalg.norm(p1[i] - p0[i]))
        norm = float(np.linalg.norm(derivative))
        assert norm > 1e-10 * distance
        assert np.linalg.norm(points[i] - point) <= 1e-11 * (1 + distance)
        assert np.linalg.norm(tangents[i] - derivative / norm) <= 1e-10


def test_average_endpoints_on_random_pairs(rng):
    p0, v0, p1, v1 = _random_pairs(rng, 10_000)
    for i in range(p0.shape[0]):
        a, b = HermitePair(p0[i], v0[i]), HermitePair(p1[i], v1[i])
        start, end = average(a, b, 0.0), average(a, b, 1.0)
        assert np.array_equal(start.point, a.point) and np.array_equal(start.tangent, a.tangent)
        assert np.array_equal(end.point, b.point) and np.array_equal(end.tangent, b.tangent)
        point, derivative = evaluate(segment(a, b), 0.0)
        assert np.array_equal(point, a.point)
        assert np.linalg.norm(derivative / np.linalg.norm(derivative) - a.tangent) <= 1e-10


def test_collinear_rows_average_linearly():
    direction = np.array([1.0, 1.0, 1.0]) / math.sqrt(3)
    p0 = np.array([[0.0, 0.0, 0.0], [1.0, -2.0, 0.5]])
    p1 = p0 + np.array([[3.0], [1e-3]]) * direction
    v = np.tile(direction, (2, 1))
    points, tangents = midpoint_average_arrays(p0, v, p1, v)
    assert np.array_equal(points, 0.5 * (p0 + p1))
    assert np.allclose(tangents, v, atol=1e-15)


def test_nearly_aligned_rows_keep_the_bezier_midpoint():
    # chord tilted by 1e-6 against equal tangents: outside the linear shortcut
    a = HermitePair.of((0.0, 0.0), (1.0, 0.0))
    b = HermitePair.of((1.0, 1e-6), (1.0, 0.0))
    points, tangents = midpoint_average_arrays(
        a.point[None, :], a.tangent[None, :], b.point[None, :], b.tangent[None, :]
    )
    point, derivative = evaluate(segment(a, b), 0.5)
    assert np.allclose(points[0], point, atol=1e-14)
    assert np.allclose(tangents[0], derivative / np.linalg.norm(derivative), atol=1e-14)
    assert tangents[0][1] > 0
