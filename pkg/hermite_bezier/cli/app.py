# hermite_bezier/cli/app.py
from __future__ import annotations

import argparse
import time
from typing import Sequence

from hermite_bezier.cli.commands import COMMANDS
from hermite_bezier.cli.error_handlers import EXIT_BAD_INPUT, ErrorRegistry, register_exception_handlers
from hermite_bezier.core.config import settings
from hermite_bezier.core.logging import get_logger, setup_logging
from hermite_bezier.core.metrics import export_metrics, record_command

logger = get_logger("hermite_bezier.cli")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hermite-bezier",
        description=f"{settings.PROJECT_NAME}: geometric Hermite averaging and refinement.",
    )
    parser.add_argument("--log-level", default=None, help="Overrides LOG_LEVEL.")
    parser.add_argument("--plain-logs", action="store_true", help="Human-readable logs instead of JSON.")
    parser.add_argument("--metrics-file", default=None, help="Write Prometheus text metrics here on exit.")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    for command in COMMANDS:
        command.register(subparsers)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors
        return EXIT_BAD_INPUT if exc.code not in (0, None) else 0

    setup_logging(args.log_level, json_format=False if args.plain_logs else None)
    registry = ErrorRegistry()
    register_exception_handlers(registry)

    started = time.perf_counter()
    try:
        exit_code = args.handler(args)
    except Exception as exc:
        handled = registry.handle(exc)
        if handled is None:
            logger.exception("unhandled error", extra={"command": args.command})
            raise
        exit_code = handled
    elapsed = time.perf_counter() - started

    record_command(args.command, exit_code, elapsed)
    logger.info("command finished", extra={"command": args.command, "exit_code": exit_code, "elapsed": elapsed})
    if args.metrics_file:
        export_metrics(args.metrics_file)
    return exit_code
