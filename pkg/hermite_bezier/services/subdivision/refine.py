# hermite_bezier/services/subdivision/refine.py
from __future__ import annotations

from dataclasses import dataclass, field

from hermite_bezier.core.logging import get_logger
from hermite_bezier.core.metrics import record_refinement_level
from hermite_bezier.domain.enums import BoundaryPolicy, SchemeKind, Topology
from hermite_bezier.schemas.refine import RefineConfig
from hermite_bezier.services.exceptions import ParameterError
from hermite_bezier.services.geometry import SIGMA_CONTRACTION_BOUND, HermiteSequence, max_gap, sigma_sup
from hermite_bezier.services.subdivision.geodesic import tangent_drift
from hermite_bezier.services.subdivision.schemes import hb_lr_step, ihb_step, linear_lr_step
from hermite_bezier.services.subdivision.tangents import estimate_tangents

logger = get_logger("hermite_bezier.subdivision")


@dataclass(frozen=True)
class TraceLevel:
    level: int
    sigma_sup: float
    max_gap: float
    tangent_drift: float | None


@dataclass
class ConvergenceTrace:
    """Per-level diagnostics; the drift of the last level is undefined (no finer level)."""

    levels: list[TraceLevel] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.levels)

    def sigma_ratios(self) -> list[float]:
        ratios = []
        for prev, nxt in zip(self.levels, self.levels[1:]):
            ratios.append(nxt.sigma_sup / prev.sigma_sup if prev.sigma_sup > 0 else 0.0)
        return ratios

    def gap_ratios(self) -> list[float]:
        return [nxt.max_gap / prev.max_gap for prev, nxt in zip(self.levels, self.levels[1:])]

    def rows(self) -> list[tuple[int, float, float, float | None]]:
        return [(lvl.level, lvl.sigma_sup, lvl.max_gap, lvl.tangent_drift) for lvl in self.levels]


def _linear_step(s: HermiteSequence, m: int) -> HermiteSequence:
    closed = s.topology is Topology.closed
    return estimate_tangents(linear_lr_step(s.points, m, closed=closed), s.topology)


def refine_step(s: HermiteSequence, cfg: RefineConfig) -> HermiteSequence:
    if cfg.scheme is SchemeKind.ihb:
        return ihb_step(s, cfg.variant)
    if cfg.scheme is SchemeKind.hb_lr:
        return hb_lr_step(s, cfg.m, cfg.variant)
    return _linear_step(s, cfg.m)


def refine(s: HermiteSequence, cfg: RefineConfig) -> tuple[HermiteSequence, ConvergenceTrace]:
    """Apply ``cfg.levels`` refinement steps, tracing σ^(k), Δ(P^k) and the tangent drift."""
    if cfg.boundary is BoundaryPolicy.wrap and s.topology is not Topology.closed:
        raise ParameterError("The wrap boundary policy requires closed topology.")

    trace = ConvergenceTrace()
    sigma0 = sigma_sup(s)
    if sigma0 > SIGMA_CONTRACTION_BOUND and cfg.scheme is not SchemeKind.linear_lr:
        message = (
            f"sigma_sup of the input is {sigma0:.6f} > 3π/4; "
            "σ-contraction and G1 convergence are not guaranteed"
        )
        trace.warnings.append(message)
        logger.warning(message, extra={"sigma_sup": sigma0, "scheme": cfg.label})

    current = s
    current_sigma, current_gap = sigma0, max_gap(s)
    for level in range(cfg.levels):
        finer = refine_step(current, cfg)
        drift = tangent_drift(current, finer, level)
        trace.levels.append(TraceLevel(level, current_sigma, current_gap, drift))
        logger.debug(
            "refinement level done",
            extra={"level": level, "sigma_sup": current_sigma, "max_gap": current_gap, "points": len(finer)},
        )
        record_refinement_level(cfg.label)
        current = finer
        current_sigma, current_gap = sigma_sup(current), max_gap(current)

    trace.levels.append(TraceLevel(cfg.levels, current_sigma, current_gap, None))
    return current, trace
