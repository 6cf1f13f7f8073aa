# hermite_bezier/cli/commands/reconstruct_check.py
from __future__ import annotations

import argparse

import numpy as np

from hermite_bezier.core.config import settings
from hermite_bezier.services.exceptions import VerificationFailedError
from hermite_bezier.services.invariant_suite import run_suite


def register(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser("reconstruct-check", help="Line, circle, similarity and contraction checks.")
    parser.add_argument("--samples", type=int, default=100_000, help="Random configurations per contraction check.")
    parser.add_argument("--seed", type=int, default=None, help="Overrides HERMITE_SEED.")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else settings.HERMITE_SEED
    results = run_suite(np.random.default_rng(seed), samples=args.samples)
    width = max(len(result.name) for result in results)
    print(f"{'check':<{width}}  status  value                  threshold")
    for result in results:
        status = "PASS" if result.passed else "FAIL"
        print(f"{result.name:<{width}}  {status:<6}  {result.value!r:<21}  {result.threshold!r}")
    failed = [result.name for result in results if not result.passed]
    if failed:
        raise VerificationFailedError(f"{len(failed)} invariant check(s) failed: {', '.join(failed)}.")
    return 0
