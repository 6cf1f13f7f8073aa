# hermite_bezier/domain/enums.py
import enum


class Topology(str, enum.Enum):
    open = "open"
    closed = "closed"


class DirectionStatus(str, enum.Enum):
    aligned = "aligned"
    pairwise_independent = "pairwise_independent"
    # exactly one of (v0, v1), (v0, u), (v1, u) is parallel
    single_dependency = "single_dependency"
    degenerate = "degenerate"


class AlphaVariant(str, enum.Enum):
    """Tangent-length rule of the Bezier average: (θ₀+θ₁)/4 or θ/4 inside the cosine."""

    paper = "paper"
    lv = "lv"


class SchemeKind(str, enum.Enum):
    ihb = "ihb"
    hb_lr = "hb-lr"
    linear_lr = "linear-lr"


class BoundaryPolicy(str, enum.Enum):
    clamp = "clamp"
    wrap = "wrap"


class CurveKind(str, enum.Enum):
    sine = "sine"
    spiral2d = "spiral2d"
    spiral3d = "spiral3d"
    circle = "circle"
    poly = "poly"


class StepSpacing(str, enum.Enum):
    parametric = "parametric"
    chordal = "chordal"
