from __future__ import annotations

from pathlib import Path
from typing import Any

from hermite_bezier.core.config import settings

try:  # pragma: no cover - optional dependency fallback
    from prometheus_client import CollectorRegistry, Counter, Histogram, write_to_textfile
except ImportError:  # pragma: no cover - optional dependency fallback
    CollectorRegistry = Counter = Histogram = None  # type: ignore[assignment]
    write_to_textfile = None  # type: ignore[assignment]


class _NoOpMetric:
    def labels(self, *args: Any, **kwargs: Any) -> "_NoOpMetric":
        return self

    def observe(self, *_: Any, **__: Any) -> None:
        return None

    def inc(self, *_: Any, **__: Any) -> None:
        return None


def _metric_or_noop(metric_factory: Any) -> Any:
    if not settings.METRICS_ENABLED or metric_factory is None:
        return _NoOpMetric()
    return metric_factory


REGISTRY = CollectorRegistry() if CollectorRegistry is not None else None

REFINEMENT_LEVELS = _metric_or_noop(
    None
    if Counter is None
    else Counter(
        f"{settings.METRICS_NAMESPACE}_refinement_levels",
        "Refinement levels applied, partitioned by scheme.",
        ["scheme"],
        registry=REGISTRY,
    )
)

AVERAGES = _metric_or_noop(
    None
    if Counter is None
    else Counter(
        f"{settings.METRICS_NAMESPACE}_averages",
        "Bezier averages computed, partitioned by evaluation path.",
        ["kind"],
        registry=REGISTRY,
    )
)

LEMMA_POINTS = _metric_or_noop(
    None
    if Counter is None
    else Counter(
        f"{settings.METRICS_NAMESPACE}_lemma_points",
        "Points evaluated by the non-negativity search.",
        ["stage"],
        registry=REGISTRY,
    )
)

COMMAND_DURATION = _metric_or_noop(
    None
    if Histogram is None
    else Histogram(
        f"{settings.METRICS_NAMESPACE}_command_duration_seconds",
        "CLI command wall time in seconds.",
        ["command"],
        buckets=[0.01, 0.1, 0.5, 1.0, 5.0, 10.0, 60.0, 300.0],
        registry=REGISTRY,
    )
)

COMMAND_ERRORS = _metric_or_noop(
    None
    if Counter is None
    else Counter(
        f"{settings.METRICS_NAMESPACE}_command_errors",
        "CLI commands that ended with a non-zero exit code.",
        ["command", "exit_code"],
        registry=REGISTRY,
    )
)


def record_refinement_level(scheme: str) -> None:
    REFINEMENT_LEVELS.labels(scheme=scheme).inc()


def record_averages(kind: str, count: int = 1) -> None:
    AVERAGES.labels(kind=kind).inc(count)


def record_lemma_points(stage: str, count: int) -> None:
    LEMMA_POINTS.labels(stage=stage).inc(count)


def record_command(command: str, exit_code: int, elapsed: float) -> None:
    COMMAND_DURATION.labels(command=command).observe(elapsed)
    if exit_code != 0:
        COMMAND_ERRORS.labels(command=command, exit_code=str(exit_code)).inc()


def export_metrics(path: str | Path) -> bool:
    """Write the text exposition format to ``path``; returns False when metrics are disabled."""
    if not settings.METRICS_ENABLED or write_to_textfile is None or REGISTRY is None:
        return False
    write_to_textfile(str(path), REGISTRY)
    return True
