# hermite_bezier/services/experiments/curves.py
"""Analytic test curves and their Hermite sampling."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.optimize import brentq

from hermite_bezier.domain.enums import CurveKind, StepSpacing, Topology
from hermite_bezier.services.exceptions import ParameterError
from hermite_bezier.services.geometry import HermiteSequence

DEFAULT_RANGES: dict[CurveKind, tuple[float, float]] = {
    CurveKind.sine: (0.0, 4 * math.pi),
    CurveKind.spiral2d: (math.pi / 2, 4 * math.pi),
    CurveKind.spiral3d: (math.pi / 2, 4 * math.pi),
    CurveKind.circle: (0.0, 2 * math.pi),
    CurveKind.poly: (-1.0, 1.0),
}

# 2e-6 t^5 on [4, 6], lowest degree first; second and fourth derivatives keep
# their sign and vary little there, and slopes stay below 0.013
QUINTIC = (0.0, 0.0, 0.0, 0.0, 0.0, 2e-6)
QUINTIC_RANGE = (4.0, 6.0)


@dataclass(frozen=True)
class CurveSpec:
    kind: CurveKind
    h: float
    t_min: float
    t_max: float
    radius: float = 1.0
    coefficients: tuple[float, ...] = (0.0, 1.0)
    spacing: StepSpacing = StepSpacing.parametric

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", CurveKind(self.kind))
        object.__setattr__(self, "spacing", StepSpacing(self.spacing))
        object.__setattr__(self, "coefficients", tuple(float(c) for c in self.coefficients))
        if not self.h > 0:
            raise ParameterError(f"Sampling step must be positive, got {self.h}.", h=self.h)
        if not self.t_max > self.t_min:
            raise ParameterError("Parameter range is empty.", t_min=self.t_min, t_max=self.t_max)
        if self.kind is CurveKind.circle and not self.radius > 0:
            raise ParameterError("Circle radius must be positive.", radius=self.radius)
        if self.kind is CurveKind.poly and not self.coefficients:
            raise ParameterError("Polynomial curves need at least one coefficient.")

    @classmethod
    def of(cls, kind: CurveKind | str, h: float, t_range: tuple[float, float] | None = None, **kwargs) -> "CurveSpec":
        kind = CurveKind(kind)
        t_min, t_max = t_range or DEFAULT_RANGES[kind]
        return cls(kind=kind, h=h, t_min=t_min, t_max=t_max, **kwargs)

    @classmethod
    def parse(cls, text: str, h: float, t_range: tuple[float, float] | None = None, **kwargs) -> "CurveSpec":
        """Parse ``sine``, ``spiral2d``, ``spiral3d``, ``circle[:radius]``, ``poly:c0,c1,...`` or ``quintic``."""
        name, _, argument = text.partition(":")
        name = name.strip().lower()
        if name == "quintic":
            return cls.of(CurveKind.poly, h, t_range or QUINTIC_RANGE, coefficients=QUINTIC, **kwargs)
        try:
            kind = CurveKind(name)
        except ValueError as exc:
            raise ParameterError(f"Unknown curve '{name}'.", curve=text) from exc
        try:
            if kind is CurveKind.circle and argument:
                kwargs["radius"] = float(argument)
            elif kind is CurveKind.poly:
                kwargs["coefficients"] = tuple(float(x) for x in argument.split(",") if x.strip())
        except ValueError as exc:
            raise ParameterError(f"Malformed curve argument in '{text}'.", curve=text) from exc
        return cls.of(kind, h, t_range, **kwargs)

    def with_step(self, h: float) -> "CurveSpec":
        return replace(self, h=h)

    @property
    def is_functional(self) -> bool:
        return self.kind in (CurveKind.sine, CurveKind.poly)

    @property
    def is_closed(self) -> bool:
        return self.kind is CurveKind.circle and math.isclose(self.t_max - self.t_min, 2 * math.pi)

    def graph(self, x: np.ndarray) -> np.ndarray:
        """Second coordinate as a function of the first, for functional curves."""
        if self.kind is CurveKind.sine:
            return np.sin(x)
        if self.kind is CurveKind.poly:
            return np.polynomial.polynomial.polyval(x, self.coefficients)
        raise ParameterError(f"Curve '{self.kind.value}' is not a graph over its first coordinate.")

    def position(self, t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=np.float64)
        if self.kind in (CurveKind.sine, CurveKind.poly):
            return np.column_stack([t, self.graph(t)])
        if self.kind is CurveKind.circle:
            return self.radius * np.column_stack([np.cos(t), np.sin(t)])
        spiral = np.column_stack([t * np.cos(t), t * np.sin(t)])
        if self.kind is CurveKind.spiral3d:
            return np.column_stack([spiral, t])
        return spiral

    def derivative(self, t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=np.float64)
        if self.kind is CurveKind.sine:
            return np.column_stack([np.ones_like(t), np.cos(t)])
        if self.kind is CurveKind.poly:
            slope = np.polynomial.polynomial.polyder(self.coefficients)
            return np.column_stack([np.ones_like(t), np.polynomial.polynomial.polyval(t, slope)])
        if self.kind is CurveKind.circle:
            return self.radius * np.column_stack([-np.sin(t), np.cos(t)])
        spiral = np.column_stack([np.cos(t) - t * np.sin(t), np.sin(t) + t * np.cos(t)])
        if self.kind is CurveKind.spiral3d:
            return np.column_stack([spiral, np.ones_like(t)])
        return spiral

    def dense(self, count: int = 20_001) -> np.ndarray:
        """Fine polyline of the true curve."""
        return self.position(np.linspace(self.t_min, self.t_max, count))


def _parametric_samples(spec: CurveSpec) -> np.ndarray:
    count = int(math.floor((spec.t_max - spec.t_min) / spec.h + 1e-9)) + 1
    return spec.t_min + spec.h * np.arange(count)


def _chordal_samples(spec: CurveSpec) -> np.ndarray:
    """Parameters whose consecutive points are ``h`` apart in Euclidean distance."""

    def point(t: float) -> np.ndarray:
        return spec.position(np.array([t]))[0]

    params = [spec.t_min]
    probe = spec.h / max(float(np.linalg.norm(spec.derivative(np.array([spec.t_min]))[0])), 1e-12)
    while True:
        start = params[-1]
        origin = point(start)

        def gap(t: float) -> float:
            return float(np.linalg.norm(point(t) - origin)) - spec.h

        upper = start + probe
        while upper < spec.t_max and gap(upper) < 0:
            upper = start + 2 * (upper - start)
        if upper >= spec.t_max:
            if gap(spec.t_max) < 0:
                break
            upper = spec.t_max
        nxt = brentq(gap, start, upper, xtol=1e-14)
        params.append(nxt)
        probe = nxt - start
    return np.array(params)


def sample_curve(spec: CurveSpec) -> HermiteSequence:
    """Exact points and normalized analytic tangents at the sample parameters."""
    if spec.spacing is StepSpacing.chordal:
        params = _chordal_samples(spec)
    else:
        params = _parametric_samples(spec)
    topology = Topology.open
    if spec.is_closed:
        topology = Topology.closed
        # the last sample duplicates the first on a full turn
        if math.isclose(params[-1], spec.t_max, abs_tol=1e-9):
            params = params[:-1]
    if params.shape[0] < 2:
        raise ParameterError("Sampling step leaves fewer than 2 samples.", h=spec.h)
    return HermiteSequence.from_arrays(spec.position(params), spec.derivative(params), topology)
