# hermite_bezier/cli/commands/refine.py
from __future__ import annotations

import argparse
from pathlib import Path

from hermite_bezier.cli.parsing import emit
from hermite_bezier.core.logging import get_logger
from hermite_bezier.domain.enums import AlphaVariant, BoundaryPolicy, SchemeKind, Topology
from hermite_bezier.schemas import RefineConfig
from hermite_bezier.services.data_io import read_hermite, sequence_to_model, write_hermite, write_trace_csv
from hermite_bezier.services.svg_export import write_svg
from hermite_bezier.services.subdivision import refine

logger = get_logger("hermite_bezier.cli")


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("refine", help="Refine Hermite data with IHB, HB-LRm or linear LRm.")
    parser.add_argument("input", type=Path, help="Hermite data (.json or .csv).")
    parser.add_argument("--topology", choices=[t.value for t in Topology], default=Topology.open.value,
                        help="Topology of CSV input (JSON carries its own).")
    parser.add_argument("--scheme", choices=[s.value for s in SchemeKind], default=SchemeKind.ihb.value)
    parser.add_argument("--m", type=int, default=1)
    parser.add_argument("--levels", type=int, default=1)
    parser.add_argument("--variant", choices=[v.value for v in AlphaVariant], default=AlphaVariant.paper.value)
    parser.add_argument("--boundary", choices=[b.value for b in BoundaryPolicy], default=BoundaryPolicy.clamp.value)
    parser.add_argument("--out", type=Path, help="Refined data (.json or .csv); stdout JSON when omitted.")
    parser.add_argument("--svg", type=Path, help="SVG drawing of input and refined polylines (2D only).")
    parser.add_argument("--trace", type=Path, help="Convergence trace CSV.")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    cfg = RefineConfig(
        scheme=args.scheme, m=args.m, levels=args.levels, variant=args.variant, boundary=args.boundary
    )
    data = read_hermite(args.input, args.topology)
    refined, trace = refine(data, cfg)
    logger.info(
        "refine done",
        extra={"scheme": cfg.label, "levels": cfg.levels, "points": len(refined), "warnings": trace.warnings},
    )

    if args.out is not None:
        write_hermite(args.out, refined)
    else:
        emit(sequence_to_model(refined))
    if args.trace is not None:
        write_trace_csv(args.trace, trace.rows())
    if args.svg is not None:
        write_svg(args.svg, [data.points, refined.points], closed=[data.is_closed, refined.is_closed])
    return 0
