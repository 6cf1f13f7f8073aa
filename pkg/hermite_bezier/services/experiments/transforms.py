# hermite_bezier/services/experiments/transforms.py
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from scipy.stats import ortho_group

from hermite_bezier.services.exceptions import DomainValidationError, ParameterError
from hermite_bezier.services.geometry import HermiteSequence

ORTHOGONALITY_TOLERANCE = 1e-12


@dataclass(frozen=True)
class SimilarityTransform:
    """x ↦ scale·R·x + translation; tangents only see the rotation."""

    rotation: np.ndarray
    translation: np.ndarray
    scale: float = 1.0

    def __post_init__(self) -> None:
        rotation = np.asarray(self.rotation, dtype=np.float64)
        translation = np.asarray(self.translation, dtype=np.float64)
        n = rotation.shape[0]
        if rotation.shape != (n, n) or translation.shape != (n,):
            raise ParameterError("Rotation must be (n, n) and translation (n,).")
        if np.max(np.abs(rotation.T @ rotation - np.eye(n))) > ORTHOGONALITY_TOLERANCE:
            raise ParameterError("Rotation matrix is not orthogonal.")
        if not self.scale > 0:
            raise ParameterError("Scale must be positive.", scale=self.scale)
        object.__setattr__(self, "rotation", rotation)
        object.__setattr__(self, "translation", translation)

    @classmethod
    def identity(cls, dimension: int) -> "SimilarityTransform":
        return cls(np.eye(dimension), np.zeros(dimension), 1.0)

    @property
    def dimension(self) -> int:
        return int(self.rotation.shape[0])

    def apply_points(self, points: npt.ArrayLike) -> np.ndarray:
        return self.scale * np.asarray(points, dtype=np.float64) @ self.rotation.T + self.translation

    def apply_tangents(self, tangents: npt.ArrayLike) -> np.ndarray:
        return np.asarray(tangents, dtype=np.float64) @ self.rotation.T


def apply_transform(s: HermiteSequence, transform: SimilarityTransform) -> HermiteSequence:
    if s.dimension != transform.dimension:
        raise DomainValidationError(
            f"Transform dimension {transform.dimension} does not match data dimension {s.dimension}."
        )
    return HermiteSequence.from_arrays(
        transform.apply_points(s.points), transform.apply_tangents(s.tangents), s.topology
    )


def random_similarity(
    rng: np.random.Generator,
    dimension: int,
    scale_range: tuple[float, float] = (0.1, 10.0),
    translation_scale: float = 10.0,
) -> SimilarityTransform:
    rotation = ortho_group.rvs(dimension, random_state=rng) if dimension > 1 else np.eye(1)
    scale = float(np.exp(rng.uniform(np.log(scale_range[0]), np.log(scale_range[1]))))
    return SimilarityTransform(rotation, rng.uniform(-translation_scale, translation_scale, dimension), scale)
