# hermite_bezier/cli/commands/sample.py
from __future__ import annotations

import argparse
from pathlib import Path

from hermite_bezier.cli.parsing import emit, parameter_range
from hermite_bezier.domain.enums import StepSpacing
from hermite_bezier.services.data_io import sequence_to_model, write_hermite
from hermite_bezier.services.experiments import CurveSpec, sample_curve
from hermite_bezier.services.svg_export import write_svg


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("sample", help="Hermite samples of an analytic curve.")
    parser.add_argument("--curve", required=True, help="sine | spiral2d | spiral3d | circle[:radius] | poly:c0,c1,... | quintic")
    parser.add_argument("--h", type=float, required=True, help="Parameter (or chord) step.")
    parser.add_argument("--range", type=parameter_range, default=None, dest="t_range")
    parser.add_argument("--spacing", choices=[s.value for s in StepSpacing], default=StepSpacing.parametric.value)
    parser.add_argument("--out", type=Path, help="Hermite data file; stdout JSON when omitted.")
    parser.add_argument("--svg", type=Path, help="SVG of the sample polyline and the true curve (2D only).")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    spec = CurveSpec.parse(args.curve, args.h, args.t_range, spacing=args.spacing)
    sequence = sample_curve(spec)
    if args.out is not None:
        write_hermite(args.out, sequence)
    else:
        emit(sequence_to_model(sequence))
    if args.svg is not None:
        write_svg(args.svg, [spec.dense(2001), sequence.points], closed=[False, sequence.is_closed])
    return 0
