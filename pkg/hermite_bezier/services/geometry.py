"""Hermite data types and the geometric quantities of an ordered pair."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np
import numpy.typing as npt

from hermite_bezier.core.config import settings
from hermite_bezier.domain.enums import DirectionStatus, Topology
from hermite_bezier.services.exceptions import (
    CoincidentPointsError,
    DataFormatError,
    DomainValidationError,
)

Vec = npt.NDArray[np.float64]

SIGMA_CONTRACTION_BOUND = 3 * math.pi / 4


def _frozen(array: npt.ArrayLike) -> Vec:
    out = np.array(array, dtype=np.float64)
    out.setflags(write=False)
    return out


def as_vec(coordinates: npt.ArrayLike) -> Vec:
    """Validate and freeze a point of R^n (n >= 2, finite coordinates)."""
    vec = np.asarray(coordinates, dtype=np.float64)
    if vec.ndim != 1 or vec.shape[0] < 2:
        raise DomainValidationError(f"A vector needs at least 2 coordinates, got shape {vec.shape}.")
    if not np.all(np.isfinite(vec)):
        raise DomainValidationError("Vector coordinates must be finite.")
    return _frozen(vec)


def unit_vec(coordinates: npt.ArrayLike) -> Vec:
    """Normalize ``coordinates`` to the unit sphere, rejecting near-zero input."""
    vec = as_vec(coordinates)
    norm = float(np.linalg.norm(vec))
    if norm < settings.UNIT_TOLERANCE:
        raise DomainValidationError("Cannot normalize a (near) zero vector.")
    return _frozen(vec / norm)


def angle_between(a: Vec, b: Vec) -> float:
    """Angular distance on the sphere, arccos of the clamped inner product."""
    return float(np.arccos(np.clip(np.dot(a, b), -1.0, 1.0)))


def angles_between(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Row-wise angular distances between two stacks of unit vectors."""
    return np.arccos(np.clip(np.einsum("ij,ij->i", a, b), -1.0, 1.0))


# --- Hermite data ---

@dataclass(frozen=True)
class HermitePair:
    """A point of R^n coupled with a unit tangent vector."""

    point: Vec
    tangent: Vec

    def __post_init__(self) -> None:
        point = as_vec(self.point)
        tangent = as_vec(self.tangent)
        if point.shape != tangent.shape:
            raise DomainValidationError(
                f"Point and tangent dimensions differ ({point.shape[0]} vs {tangent.shape[0]})."
            )
        if abs(float(np.linalg.norm(tangent)) - 1.0) > settings.UNIT_TOLERANCE:
            raise DomainValidationError("Tangent must be a unit vector; use HermitePair.of to normalize.")
        object.__setattr__(self, "point", point)
        object.__setattr__(self, "tangent", tangent)

    @classmethod
    def of(cls, point: npt.ArrayLike, tangent: npt.ArrayLike) -> "HermitePair":
        """Build a pair, normalizing the tangent."""
        return cls(as_vec(point), unit_vec(tangent))

    @property
    def dimension(self) -> int:
        return int(self.point.shape[0])


@dataclass(frozen=True)
class HermiteSequence:
    """Ordered Hermite pairs with open or closed topology (the subdivision state P^k)."""

    points: Vec
    tangents: Vec
    topology: Topology = Topology.open

    def __post_init__(self) -> None:
        points = np.asarray(self.points, dtype=np.float64)
        tangents = np.asarray(self.tangents, dtype=np.float64)
        if points.ndim != 2 or points.shape != tangents.shape:
            raise DataFormatError(
                f"Points and tangents must be matching (N, n) arrays, got {points.shape} and {tangents.shape}."
            )
        if points.shape[0] < 2:
            raise DataFormatError("A Hermite sequence needs at least 2 pairs.")
        if points.shape[1] < 2:
            raise DataFormatError("Hermite data must live in R^n with n >= 2.")
        if not (np.all(np.isfinite(points)) and np.all(np.isfinite(tangents))):
            raise DataFormatError("Hermite data must be finite.")
        norms = np.linalg.norm(tangents, axis=1)
        if np.any(np.abs(norms - 1.0) > settings.UNIT_TOLERANCE):
            raise DataFormatError("Tangents must be unit vectors; use from_arrays(normalize=True).")
        topology = Topology(self.topology)
        object.__setattr__(self, "points", _frozen(points))
        object.__setattr__(self, "tangents", _frozen(tangents))
        object.__setattr__(self, "topology", topology)

        left, right = self.pair_indices()
        gaps = np.linalg.norm(points[right] - points[left], axis=1)
        coincident = np.flatnonzero(gaps <= settings.POINT_TOLERANCE)
        if coincident.size:
            index = int(coincident[0])
            raise CoincidentPointsError(
                f"Consecutive points {index} and {int(right[index])} coincide.",
                index=index,
            )

    @classmethod
    def from_arrays(
        cls,
        points: npt.ArrayLike,
        tangents: npt.ArrayLike,
        topology: Topology | str = Topology.open,
        *,
        normalize: bool = True,
    ) -> "HermiteSequence":
        tangents = np.asarray(tangents, dtype=np.float64)
        if normalize:
            if tangents.ndim != 2:
                raise DataFormatError(f"Tangents must be an (N, n) array, got shape {tangents.shape}.")
            norms = np.linalg.norm(tangents, axis=1)
            small = np.flatnonzero(norms < settings.UNIT_TOLERANCE)
            if small.size:
                raise DataFormatError(f"Tangent {int(small[0])} is (near) zero.", index=int(small[0]))
            tangents = tangents / norms[:, None]
        return cls(np.asarray(points, dtype=np.float64), tangents, Topology(topology))

    @classmethod
    def from_pairs(
        cls, pairs: Sequence[HermitePair], topology: Topology | str = Topology.open
    ) -> "HermiteSequence":
        if not pairs:
            raise DataFormatError("A Hermite sequence needs at least 2 pairs.")
        dims = {pair.dimension for pair in pairs}
        if len(dims) != 1:
            raise DataFormatError(f"Mixed dimensions in Hermite data: {sorted(dims)}.")
        return cls(
            np.stack([pair.point for pair in pairs]),
            np.stack([pair.tangent for pair in pairs]),
            Topology(topology),
        )

    def __len__(self) -> int:
        return int(self.points.shape[0])

    def __getitem__(self, index: int) -> HermitePair:
        return HermitePair(self.points[index], self.tangents[index])

    def __iter__(self) -> Iterator[HermitePair]:
        for index in range(len(self)):
            yield self[index]

    @property
    def dimension(self) -> int:
        return int(self.points.shape[1])

    @property
    def is_closed(self) -> bool:
        return self.topology is Topology.closed

    def pair_indices(self) -> tuple[np.ndarray, np.ndarray]:
        """Indices (j, j+1) of consecutive pairs; closed sequences wrap N-1 -> 0."""
        count = int(self.points.shape[0])
        left = np.arange(count if self.topology is Topology.closed else count - 1)
        return left, (left + 1) % count

    def consecutive(self) -> tuple[Vec, Vec, Vec, Vec]:
        left, right = self.pair_indices()
        return self.points[left], self.tangents[left], self.points[right], self.tangents[right]


# --- Pair geometry ---

@dataclass(frozen=True)
class PairGeometry:
    """Derived quantities of an ordered pair of Hermite pairs."""

    u: Vec
    theta: float
    theta0: float
    theta1: float
    sigma: float
    distance: float


@dataclass(frozen=True)
class AdmissibilityReport:
    points_distinct: bool
    direction_status: DirectionStatus
    acute_sufficient: bool
    planar_degeneracy_roots: list[float] = field(default_factory=list)

    @property
    def admissible(self) -> bool:
        """Distinct points, and directions that are aligned or not all collinear."""
        return self.points_distinct and self.direction_status is not DirectionStatus.degenerate

    @property
    def reason(self) -> str:
        if not self.points_distinct:
            return "points coincide"
        if self.direction_status is DirectionStatus.degenerate:
            return "v0, v1 and u are collinear without being aligned"
        return "admissible"


def _check_same_dimension(a: HermitePair, b: HermitePair) -> None:
    if a.dimension != b.dimension:
        raise DomainValidationError(f"Pair dimensions differ ({a.dimension} vs {b.dimension}).")


def pair_geometry(a: HermitePair, b: HermitePair) -> PairGeometry:
    _check_same_dimension(a, b)
    diff = b.point - a.point
    distance = float(np.linalg.norm(diff))
    if distance <= settings.POINT_TOLERANCE:
        raise CoincidentPointsError("Points of the pair coincide.", distance=distance)
    u = _frozen(diff / distance)
    theta0 = angle_between(a.tangent, u)
    theta1 = angle_between(b.tangent, u)
    return PairGeometry(
        u=u,
        theta=angle_between(a.tangent, b.tangent),
        theta0=theta0,
        theta1=theta1,
        sigma=math.hypot(theta0, theta1),
        distance=distance,
    )


def pair_geometry_arrays(
    p0: np.ndarray, v0: np.ndarray, p1: np.ndarray, v1: np.ndarray
) -> dict[str, np.ndarray]:
    """Row-wise pair geometry; rows with coincident points raise CoincidentPointsError."""
    diff = p1 - p0
    distance = np.linalg.norm(diff, axis=1)
    coincident = np.flatnonzero(distance <= settings.POINT_TOLERANCE)
    if coincident.size:
        index = int(coincident[0])
        raise CoincidentPointsError(f"Points of pair {index} coincide.", index=index)
    u = diff / distance[:, None]
    theta0 = angles_between(v0, u)
    theta1 = angles_between(v1, u)
    return {
        "u": u,
        "distance": distance,
        "theta": angles_between(v0, v1),
        "theta0": theta0,
        "theta1": theta1,
        "sigma": np.hypot(theta0, theta1),
    }


def classify_directions(
    theta0: np.ndarray, theta1: np.ndarray, cos01: np.ndarray, cos0: np.ndarray, cos1: np.ndarray
) -> np.ndarray:
    """Vectorised direction status codes.

    0 aligned, 1 pairwise independent, 2 degenerate (all three collinear but not
    aligned), 3 exactly one parallel pair whose third vector is independent of both.
    """
    aligned = (theta0 <= settings.ALIGNED_ANGLE_TOLERANCE) & (theta1 <= settings.ALIGNED_ANGLE_TOLERANCE)
    tol = settings.PARALLEL_TOLERANCE
    parallel = (
        (1.0 - np.abs(cos01) <= tol).astype(int)
        + (1.0 - np.abs(cos0) <= tol).astype(int)
        + (1.0 - np.abs(cos1) <= tol).astype(int)
    )
    return np.where(aligned, 0, np.where(parallel == 0, 1, np.where(parallel == 1, 3, 2)))


_STATUS_BY_CODE = {
    0: DirectionStatus.aligned,
    1: DirectionStatus.pairwise_independent,
    2: DirectionStatus.degenerate,
    3: DirectionStatus.single_dependency,
}


def acute_sufficient(theta: float, theta0: float, theta1: float) -> bool:
    """Acute-angle sufficient condition for a regular Bezier derivative on (0, 1)."""
    c = math.cos((theta0 + theta1) / 4) ** 2
    return (
        theta < math.pi / 2
        and 3 * c * math.cos(theta0) - 1 - math.cos(theta) > 0
        and 3 * c * math.cos(theta1) - 1 - math.cos(theta) > 0
    )


def _quadratic_roots(a: float, b: float, k: float) -> list[float] | None:
    """Real roots in [0, 1] of a t^2 + b t + k; None when the polynomial vanishes identically."""
    tiny = 1e-12
    tol = settings.ROOT_TOLERANCE
    if abs(a) <= tiny and abs(b) <= tiny:
        return None if abs(k) <= tiny else []
    if abs(a) <= tiny:
        candidates = [-k / b]
    else:
        disc = b * b - 4 * a * k
        if disc < 0:
            if disc < -tol:
                return []
            disc = 0.0
        root = math.sqrt(disc)
        candidates = [(-b - root) / (2 * a), (-b + root) / (2 * a)]
    return sorted(min(max(t, 0.0), 1.0) for t in candidates if -tol <= t <= 1 + tol)


def planar_degeneracy_roots(v0: Vec, v1: Vec, u: Vec, theta0: float, theta1: float) -> list[float]:
    """Parameters t in [0, 1] where the planar Bezier derivative vanishes (empty if none)."""
    cos0 = float(np.dot(v0, u))
    cos1 = float(np.dot(v1, u))
    frame = None
    for vec, cos in ((v0, cos0), (v1, cos1)):
        normal = vec - cos * u
        norm = float(np.linalg.norm(normal))
        if norm > 1e-8:
            frame = normal / norm
            break
    sin0 = 0.0 if frame is None else float(np.dot(v0, frame))
    sin1 = 0.0 if frame is None else float(np.dot(v1, frame))

    c = math.cos((theta0 + theta1) / 4) ** 2
    first = _quadratic_roots(-6 * c + 3 * cos0 + 3 * cos1, 6 * c - 4 * cos0 - 2 * cos1, cos0)
    second = _quadratic_roots(3 * sin0 + 3 * sin1, -4 * sin0 - 2 * sin1, sin0)
    if first is None and second is None:
        return []
    if first is None:
        return second or []
    if second is None:
        return first

    tol = settings.ROOT_TOLERANCE
    roots: list[float] = []
    for t in first:
        for s in second:
            if abs(t - s) <= tol:
                mid = 0.5 * (t + s)
                if not roots or abs(roots[-1] - mid) > tol:
                    roots.append(mid)
    return roots


def _gram_determinant(*vectors: Vec) -> float:
    stack = np.stack(vectors)
    return float(np.linalg.det(stack @ stack.T))


def check_admissible(a: HermitePair, b: HermitePair) -> AdmissibilityReport:
    _check_same_dimension(a, b)
    diff = b.point - a.point
    distance = float(np.linalg.norm(diff))
    if distance <= settings.POINT_TOLERANCE:
        return AdmissibilityReport(
            points_distinct=False,
            direction_status=DirectionStatus.degenerate,
            acute_sufficient=False,
        )

    u = diff / distance
    cos01 = float(np.dot(a.tangent, b.tangent))
    cos0 = float(np.dot(a.tangent, u))
    cos1 = float(np.dot(b.tangent, u))
    theta = float(np.arccos(np.clip(cos01, -1.0, 1.0)))
    theta0 = float(np.arccos(np.clip(cos0, -1.0, 1.0)))
    theta1 = float(np.arccos(np.clip(cos1, -1.0, 1.0)))
    code = int(
        classify_directions(
            np.array([theta0]), np.array([theta1]), np.array([cos01]), np.array([cos0]), np.array([cos1])
        )[0]
    )

    roots: list[float] = []
    if _gram_determinant(a.tangent, b.tangent, u) <= settings.GRAM_TOLERANCE:
        roots = planar_degeneracy_roots(a.tangent, b.tangent, u, theta0, theta1)

    return AdmissibilityReport(
        points_distinct=True,
        direction_status=_STATUS_BY_CODE[code],
        acute_sufficient=acute_sufficient(theta, theta0, theta1),
        planar_degeneracy_roots=roots,
    )


def sigma_sup(sequence: HermiteSequence) -> float:
    """sup of σ over consecutive pairs, respecting topology (σ^(k) of a refinement level)."""
    geometry = pair_geometry_arrays(*sequence.consecutive())
    return float(np.max(geometry["sigma"]))


def max_gap(sequence: HermiteSequence) -> float:
    left, right = sequence.pair_indices()
    return float(np.max(np.linalg.norm(sequence.points[right] - sequence.points[left], axis=1)))
