# hermite_bezier/cli/commands/order.py
from __future__ import annotations

import argparse
from pathlib import Path

from hermite_bezier.cli.parsing import emit, float_list, parameter_range
from hermite_bezier.domain.enums import AlphaVariant, SchemeKind
from hermite_bezier.schemas import OrderSummaryModel, RefineConfig
from hermite_bezier.services.data_io import write_json, write_order_csv
from hermite_bezier.services.experiments import CurveSpec, order_experiment

DEFAULT_STEPS = "1,0.5,0.25,0.125,0.0625"


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("order", help="Estimate the approximation order on a functional curve.")
    parser.add_argument("--curve", default="quintic", help="quintic | sine | poly:c0,c1,...")
    parser.add_argument("--range", type=parameter_range, default=None, dest="t_range")
    parser.add_argument("--scheme", choices=[s.value for s in SchemeKind], default=SchemeKind.ihb.value)
    parser.add_argument("--m", type=int, default=1)
    parser.add_argument("--variant", choices=[v.value for v in AlphaVariant], default=AlphaVariant.paper.value)
    parser.add_argument("--h-list", type=float_list, default=float_list(DEFAULT_STEPS))
    parser.add_argument("--depth", type=int, default=10)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--report", type=Path, help="CSV of (h, error, log_h, log_error).")
    parser.add_argument("--summary", type=Path, help="JSON summary {slope, intercept, residual}.")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    scheme = RefineConfig(scheme=args.scheme, m=args.m, variant=args.variant, levels=0)
    spec = CurveSpec.parse(args.curve, args.h_list[0] if args.h_list else 1.0, args.t_range)
    report = order_experiment(spec, scheme, args.h_list, args.depth, workers=args.workers)
    summary = OrderSummaryModel(**report.summary())
    if args.report is not None:
        write_order_csv(args.report, report.csv_rows())
    if args.summary is not None:
        write_json(args.summary, summary)
    emit(summary)
    return 0
