# hermite_bezier/cli/parsing.py
from __future__ import annotations

import argparse
import sys

from pydantic import BaseModel

from hermite_bezier.services.data_io import dumps_json


def vector(text: str) -> list[float]:
    try:
        values = [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"'{text}' is not a comma separated list of numbers") from exc
    if len(values) < 2:
        raise argparse.ArgumentTypeError("vectors need at least 2 coordinates")
    return values


def float_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"'{text}' is not a comma separated list of numbers") from exc


def parameter_range(text: str) -> tuple[float, float]:
    values = float_list(text)
    if len(values) != 2:
        raise argparse.ArgumentTypeError("ranges are given as 'min,max'")
    return values[0], values[1]


def emit(payload: BaseModel | dict | list) -> None:
    sys.stdout.write(dumps_json(payload))
