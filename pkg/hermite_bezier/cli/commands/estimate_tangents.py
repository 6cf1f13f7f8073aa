# hermite_bezier/cli/commands/estimate_tangents.py
from __future__ import annotations

import argparse
from pathlib import Path

from hermite_bezier.cli.parsing import emit
from hermite_bezier.domain.enums import Topology
from hermite_bezier.services.data_io import read_points, sequence_to_model, write_hermite
from hermite_bezier.services.subdivision import estimate_tangents


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("estimate-tangents", help="Tangents for point-only CSV data.")
    parser.add_argument("input", type=Path, help="CSV with a header row and one point per row.")
    parser.add_argument("--topology", choices=[t.value for t in Topology], default=Topology.open.value)
    parser.add_argument("--out", type=Path, help="Hermite data file; stdout JSON when omitted.")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    sequence = estimate_tangents(read_points(args.input), args.topology)
    if args.out is not None:
        write_hermite(args.out, sequence)
    else:
        emit(sequence_to_model(sequence))
    return 0
