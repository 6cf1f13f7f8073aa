# hermite_bezier/cli/commands/validate_lemma.py
from __future__ import annotations

import argparse
from pathlib import Path

from hermite_bezier.cli.parsing import emit
from hermite_bezier.core.config import settings
from hermite_bezier.schemas import CertificateModel, SearchParams
from hermite_bezier.services.data_io import write_grid_csv, write_json
from hermite_bezier.services.exceptions import VerificationFailedError
from hermite_bezier.services.lemma_validation import grid_dump, verify_nonnegativity


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("validate-lemma", help="Certify D >= 0 over the angle domain.")
    parser.add_argument("--M", type=float, default=settings.LEMMA_M, help="Gradient sup-norm bound.")
    parser.add_argument("--r", type=float, default=settings.LEMMA_R, help="Radius of the origin ball.")
    parser.add_argument("--eps", type=float, default=settings.LEMMA_EPS)
    parser.add_argument("--step-floor", type=float, default=settings.LEMMA_STEP_FLOOR)
    parser.add_argument("--cap-step", type=float, default=settings.LEMMA_CAP_STEP)
    parser.add_argument("--threads", type=int, default=None, help="Workers (default: available CPUs).")
    parser.add_argument("--certificate", type=Path, help="Write the JSON certificate here.")
    parser.add_argument("--grid-dump", type=Path, help="CSV of (theta0, theta1, theta, D, Q) on a coarse grid.")
    parser.add_argument("--grid-step", type=float, default=None, help="Grid spacing for --grid-dump.")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    params = SearchParams(
        M=args.M,
        r=args.r,
        eps=args.eps,
        step_floor=args.step_floor,
        cap_step=args.cap_step,
        threads=args.threads or settings.lemma_threads,
    )
    if args.grid_dump is not None:
        rows = grid_dump(args.grid_step) if args.grid_step else grid_dump()
        write_grid_csv(args.grid_dump, rows)

    certificate = CertificateModel.model_validate(verify_nonnegativity(params).to_dict())
    if args.certificate is not None:
        write_json(args.certificate, certificate)
    emit(certificate)
    if certificate.failure is not None:
        raise VerificationFailedError(
            "D < eps found in the angle domain; the contraction bound is not certified.",
            point=certificate.failure,
        )
    if not certificate.passed:
        raise VerificationFailedError(
            f"{certificate.escalations} stretches hit the step floor without a certifying value; "
            "lower --step-floor or raise --M.",
            uncertified=certificate.uncertified[:5],
        )
    return 0
