from hermite_bezier.cli.commands import (
    average,
    estimate_tangents,
    order,
    reconstruct_check,
    refine,
    sample,
    validate_lemma,
)

COMMANDS = (average, refine, estimate_tangents, validate_lemma, order, sample, reconstruct_check)

__all__ = ["COMMANDS"]
