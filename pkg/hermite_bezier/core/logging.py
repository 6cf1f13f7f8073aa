# hermite_bezier/core/logging.py
from __future__ import annotations

import json
import logging
import logging.config
from datetime import datetime, timezone
from typing import Any

import numpy as np

from hermite_bezier.core.config import settings

_STANDARD_ATTRS = set(logging.makeLogRecord({}).__dict__.keys()) | {"message", "asctime"}


def _jsonable(value: Any) -> Any:
    # numpy scalars and arrays show up in extras (failure points, sigma values)
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, np.generic):
        return value.item()
    return str(value)


class JsonFormatter(logging.Formatter):
    """One JSON object per record; extras land under ``extra``."""

    def format(self, record: logging.LogRecord) -> str:
        message = {
            "timestamp": datetime.now(timezone.utc).isoformat(),
            "level": record.levelname,
            "logger": record.name,
            "message": record.getMessage(),
        }
        if record.exc_info:
            message["exc_info"] = self.formatException(record.exc_info)

        extra = {key: value for key, value in record.__dict__.items() if key not in _STANDARD_ATTRS}
        if extra:
            message["extra"] = extra

        return json.dumps(message, default=_jsonable)


def setup_logging(level: str | None = None, json_format: bool | None = None) -> None:
    """Apply centralized logging configuration (stderr only; stdout carries command output)."""
    level_name = (level or settings.LOG_LEVEL).upper()
    resolved = getattr(logging, level_name, logging.INFO)
    use_json = settings.LOG_JSON if json_format is None else json_format
    logging_config: dict[str, Any] = {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "json": {"()": JsonFormatter},
            "plain": {"format": "%(asctime)s [%(levelname)s] %(name)s: %(message)s"},
        },
        "handlers": {
            "default": {
                "class": "logging.StreamHandler",
                "formatter": "json" if use_json else "plain",
                "stream": "ext://sys.stderr",
            }
        },
        "root": {
            "handlers": ["default"],
            "level": resolved,
        },
    }

    logging.config.dictConfig(logging_config)


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)
