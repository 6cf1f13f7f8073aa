"""Run the spiral, sine and order experiments and write their tables under ``results/``."""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import asdict
from pathlib import Path

ROOT_DIR = Path(__file__).resolve().parents[1]
if str(ROOT_DIR) not in sys.path:
    sys.path.insert(0, str(ROOT_DIR))

from hermite_bezier.domain.enums import SchemeKind
from hermite_bezier.schemas import RefineConfig
from hermite_bezier.services.data_io import write_json, write_order_csv
from hermite_bezier.services.experiments import CurveSpec, compare_schemes, order_experiment

ORDER_STEPS = (1.0, 0.5, 0.25, 0.125, 0.0625)


def reproduce(out_dir: Path, levels: int, depth: int) -> None:
    logger = logging.getLogger("reproduce_experiments")
    out_dir.mkdir(parents=True, exist_ok=True)

    rows = compare_schemes(levels=levels)
    write_json(out_dir / "comparison.json", [asdict(row) for row in rows])
    for row in rows:
        logger.info("%-12s h=%.4f %-10s %-6s error=%.3e", row.curve, row.h, row.scheme, row.variant, row.error)

    quintic = CurveSpec.parse("quintic", ORDER_STEPS[0])
    for cfg in (
        RefineConfig(scheme=SchemeKind.ihb, levels=0),
        RefineConfig(scheme=SchemeKind.hb_lr, m=3, levels=0),
    ):
        report = order_experiment(quintic, cfg, ORDER_STEPS, depth=depth)
        write_order_csv(out_dir / f"order_{cfg.label}.csv", report.csv_rows())
        write_json(out_dir / f"order_{cfg.label}.json", report.summary())
        logger.info("order %s: slope=%.3f residual=%.3e", cfg.label, report.slope, report.residual)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=ROOT_DIR / "results")
    parser.add_argument("--levels", type=int, default=6)
    parser.add_argument("--depth", type=int, default=10)
    args = parser.parse_args()
    reproduce(args.out, args.levels, args.depth)


if __name__ == "__main__":
    logging.basicConfig(
        level=logging.INFO,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
    )
    main()
