# hermite_bezier/services/lemma_validation/closed_forms.py
"""σ of the left child of a midpoint average, written as a function of (θ₀, θ₁, θ).

With ``c = cos²((θ₀+θ₁)/4)`` the angles of the pair ``(a, midpoint)`` are

    cos θ̃₀₀ = (4c·cos θ₀ + 1 − cos θ) / sqrt(2A)
    cos θ̃₀₁ = c·(12c + cos θ₀ − 5 cos θ₁) / sqrt(A·B)

where ``A = 8c² + 1 − cos θ + 4c(cos θ₀ − cos θ₁)`` and
``B = 18c² + 1 + cos θ − 6c(cos θ₀ + cos θ₁)``.  The contraction quotient is
``Q = σ̃² / σ²`` and the certified quantity is ``D = 0.9σ² − σ̃²``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from hermite_bezier.services.bezier_average import midpoint_average
from hermite_bezier.services.exceptions import (
    DegenerateDenominatorError,
    OutOfRangeError,
    UndefinedAtOriginError,
)
from hermite_bezier.services.geometry import HermitePair, pair_geometry

OMEGA_RADIUS = 3 * math.pi / 4
CONTRACTION_SQUARED = 0.9
DENOMINATOR_FLOOR = 1e-14


@dataclass(frozen=True)
class AngleTriple:
    theta0: float
    theta1: float
    theta: float

    def __post_init__(self) -> None:
        for name in ("theta0", "theta1", "theta"):
            value = getattr(self, name)
            if not 0.0 <= value <= math.pi:
                raise OutOfRangeError(f"{name}={value} outside [0, π].", **{name: value})

    @property
    def sigma(self) -> float:
        return math.hypot(self.theta0, self.theta1)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.theta0, self.theta1, self.theta)


def theta_tilde_arrays(theta0: np.ndarray, theta1: np.ndarray, theta: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised θ̃₀₀, θ̃₀₁; NaN where a square-root argument is not positive."""
    theta0, theta1, theta = np.broadcast_arrays(
        np.asarray(theta0, dtype=np.float64), np.asarray(theta1, dtype=np.float64), np.asarray(theta, dtype=np.float64)
    )
    c = np.cos((theta0 + theta1) / 4) ** 2
    cos0, cos1, cos_t = np.cos(theta0), np.cos(theta1), np.cos(theta)
    a = 8 * c * c + 1 - cos_t + 4 * c * (cos0 - cos1)
    b = 18 * c * c + 1 + cos_t - 6 * c * (cos0 + cos1)
    bad = (a <= DENOMINATOR_FLOOR) | (b <= DENOMINATOR_FLOOR)
    a_safe = np.where(bad, 1.0, a)
    b_safe = np.where(bad, 1.0, b)
    cos00 = (4 * c * cos0 + 1 - cos_t) / np.sqrt(2 * a_safe)
    cos01 = c * (12 * c + cos0 - 5 * cos1) / np.sqrt(a_safe * b_safe)
    tilde00 = np.where(bad, np.nan, np.arccos(np.clip(cos00, -1.0, 1.0)))
    tilde01 = np.where(bad, np.nan, np.arccos(np.clip(cos01, -1.0, 1.0)))
    return tilde00, tilde01


def d_value_arrays(theta0: np.ndarray, theta1: np.ndarray, theta: np.ndarray) -> np.ndarray:
    tilde00, tilde01 = theta_tilde_arrays(theta0, theta1, theta)
    return CONTRACTION_SQUARED * (np.square(theta0) + np.square(theta1)) - tilde00**2 - tilde01**2


def in_omega_arrays(theta0: np.ndarray, theta1: np.ndarray, theta: np.ndarray) -> np.ndarray:
    return (
        (np.hypot(theta0, theta1) <= OMEGA_RADIUS)
        & (np.abs(theta1 - theta0) <= theta)
        & (theta <= theta0 + theta1)
    )


def theta_tilde(t: AngleTriple) -> tuple[float, float]:
    tilde00, tilde01 = theta_tilde_arrays(np.array([t.theta0]), np.array([t.theta1]), np.array([t.theta]))
    if np.isnan(tilde00[0]) or np.isnan(tilde01[0]):
        raise DegenerateDenominatorError(
            "Square-root argument of the closed form is not positive.", point=list(t.as_tuple())
        )
    return float(tilde00[0]), float(tilde01[0])


def sigma_half(t: AngleTriple) -> float:
    """σ of the left child pair (a, midpoint)."""
    return math.hypot(*theta_tilde(t))


def q_value(t: AngleTriple) -> float:
    if t.theta0 == 0.0 and t.theta1 == 0.0:
        raise UndefinedAtOriginError("Q is 0/0 when θ₀ = θ₁ = 0.")
    tilde00, tilde01 = theta_tilde(t)
    return (tilde00**2 + tilde01**2) / (t.theta0**2 + t.theta1**2)


def d_value(t: AngleTriple) -> float:
    tilde00, tilde01 = theta_tilde(t)
    return CONTRACTION_SQUARED * (t.theta0**2 + t.theta1**2) - tilde00**2 - tilde01**2


def in_omega(t: AngleTriple) -> bool:
    return bool(in_omega_arrays(t.theta0, t.theta1, t.theta))


def gradient_probe(t: AngleTriple, h: float = 1e-6) -> np.ndarray:
    """Central finite-difference gradient of D at ``t``."""
    base = np.array(t.as_tuple())
    offsets = h * np.eye(3)
    plus = base + offsets
    minus = base - offsets
    upper = d_value_arrays(plus[:, 0], plus[:, 1], plus[:, 2])
    lower = d_value_arrays(minus[:, 0], minus[:, 1], minus[:, 2])
    if np.any(np.isnan(upper)) or np.any(np.isnan(lower)):
        raise DegenerateDenominatorError("D is undefined next to the probe point.", point=base.tolist(), h=h)
    return (upper - lower) / (2 * h)


# --- geometric realization ---

def realize_configuration(t: AngleTriple) -> tuple[HermitePair, HermitePair]:
    """Hermite pairs in R³ with p0 = 0, p1 = e1 whose angles are exactly ``t``.

    ``v0`` lies in the (e1, e2) plane; ``v1`` sits on the cone of half-angle θ₁
    around e1, rotated so that the angle between the tangents is θ.
    """
    sin0, sin1 = math.sin(t.theta0), math.sin(t.theta1)
    if sin0 * sin1 > 1e-15:
        cos_phi = (math.cos(t.theta) - math.cos(t.theta0) * math.cos(t.theta1)) / (sin0 * sin1)
    else:
        cos_phi = 1.0
    cos_phi = min(1.0, max(-1.0, cos_phi))
    sin_phi = math.sqrt(1.0 - cos_phi * cos_phi)
    v0 = np.array([math.cos(t.theta0), sin0, 0.0])
    v1 = np.array([math.cos(t.theta1), sin1 * cos_phi, sin1 * sin_phi])
    a = HermitePair(np.zeros(3), v0 / np.linalg.norm(v0))
    b = HermitePair(np.array([1.0, 0.0, 0.0]), v1 / np.linalg.norm(v1))
    return a, b


def measured_theta_tilde(t: AngleTriple, side: str = "left") -> tuple[float, float]:
    """θ̃ measured after an actual midpoint average; ``side="right"`` measures (m, b) reversed."""
    a, b = realize_configuration(t)
    m = midpoint_average(a, b)
    if side == "left":
        g = pair_geometry(a, m)
        return g.theta0, g.theta1
    g = pair_geometry(m, b)
    return g.theta1, g.theta0
