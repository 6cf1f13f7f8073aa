# hermite_bezier/cli/error_handlers.py
"""Exception to exit-code mapping for the command line, one handler per error family."""

from __future__ import annotations

import sys
from typing import Callable, TypeVar

from pydantic import ValidationError

from hermite_bezier.core.logging import get_logger
from hermite_bezier.services.exceptions import (
    DomainValidationError,
    HermiteError,
    VerificationFailedError,
)

logger = get_logger("hermite_bezier.cli")

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_BAD_INPUT = 2

E = TypeVar("E", bound=BaseException)
Handler = Callable[[BaseException], int]


class ErrorRegistry:
    def __init__(self) -> None:
        self._handlers: list[tuple[type[BaseException], Handler]] = []

    def exception_handler(self, exc_type: type[E]) -> Callable[[Callable[[E], int]], Callable[[E], int]]:
        def decorator(func: Callable[[E], int]) -> Callable[[E], int]:
            self._handlers.append((exc_type, func))  # type: ignore[arg-type]
            return func

        return decorator

    def handle(self, exc: BaseException) -> int | None:
        for exc_type, handler in self._handlers:
            if isinstance(exc, exc_type):
                return handler(exc)
        return None


def _report(detail: str, exit_code: int, **context) -> int:
    print(f"error: {detail}", file=sys.stderr)
    logger.error(detail, extra={"exit_code": exit_code, **context})
    return exit_code


def register_exception_handlers(registry: ErrorRegistry) -> None:
    @registry.exception_handler(VerificationFailedError)
    def handle_verification(exc: VerificationFailedError) -> int:
        return _report(exc.detail, EXIT_VERIFICATION_FAILED, **exc.context)

    @registry.exception_handler(DomainValidationError)
    def handle_validation(exc: DomainValidationError) -> int:
        return _report(exc.detail, EXIT_BAD_INPUT, **exc.context)

    @registry.exception_handler(ValidationError)
    def handle_schema(exc: ValidationError) -> int:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first.get("loc", ()))
        detail = f"{location}: {first['msg']}" if location else first["msg"]
        return _report(detail, EXIT_BAD_INPUT)

    @registry.exception_handler(HermiteError)
    def handle_service_error(exc: HermiteError) -> int:
        return _report(exc.detail, EXIT_BAD_INPUT, **exc.context)

    @registry.exception_handler(OSError)
    def handle_io(exc: OSError) -> int:
        return _report(f"{exc.strerror or exc}: {exc.filename}", EXIT_BAD_INPUT)
