# hermite_bezier/cli/commands/average.py
from __future__ import annotations

import argparse
from pathlib import Path

from hermite_bezier.cli.parsing import emit, vector
from hermite_bezier.domain.enums import AlphaVariant
from hermite_bezier.schemas import AverageRequestModel, AverageResultModel, BezierSegmentModel
from hermite_bezier.services.bezier_average import average, segment
from hermite_bezier.services.exceptions import ParameterError
from hermite_bezier.services.geometry import HermitePair


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("average", help="Bezier average of two Hermite pairs.")
    parser.add_argument("--input", type=Path, help="JSON file {'a': {...}, 'b': {...}, 'w': x}.")
    parser.add_argument("--p0", type=vector)
    parser.add_argument("--v0", type=vector)
    parser.add_argument("--p1", type=vector)
    parser.add_argument("--v1", type=vector)
    parser.add_argument("--w", type=float, default=None, help="Weight in [0, 1] (default 0.5).")
    parser.add_argument("--variant", choices=[v.value for v in AlphaVariant], default=AlphaVariant.paper.value)
    parser.add_argument("--segment", action="store_true", help="Also print the Bezier control points.")
    parser.set_defaults(handler=run)


def _request(args: argparse.Namespace) -> AverageRequestModel:
    if args.input is not None:
        request = AverageRequestModel.model_validate_json(args.input.read_text(encoding="utf-8"))
        if args.w is not None:
            request = request.model_copy(update={"w": args.w})
        return AverageRequestModel.model_validate(request.model_dump())
    if None in (args.p0, args.v0, args.p1, args.v1):
        raise ParameterError("average needs --input or all of --p0 --v0 --p1 --v1.")
    return AverageRequestModel(
        a={"point": args.p0, "tangent": args.v0},
        b={"point": args.p1, "tangent": args.v1},
        w=0.5 if args.w is None else args.w,
    )


def run(args: argparse.Namespace) -> int:
    request = _request(args)
    variant = AlphaVariant(args.variant)
    a = HermitePair.of(request.a.point, request.a.tangent)
    b = HermitePair.of(request.b.point, request.b.tangent)
    result = average(a, b, request.w, variant)
    payload = AverageResultModel(
        point=result.point.tolist(), tangent=result.tangent.tolist(), w=request.w, variant=variant.value
    ).model_dump(mode="json")
    if args.segment:
        payload["segment"] = BezierSegmentModel(**segment(a, b, variant).to_dict()).model_dump(mode="json")
    emit(payload)
    return 0
