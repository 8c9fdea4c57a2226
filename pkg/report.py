"""
report.py: Coordinate-growth report over a generated corpus
"""
import logging
from pathlib import Path
from typing import Optional, Union

import pandas as pd

from generator import corpus
from models import DrawConfig
from simdraw.engine import run
from simdraw.errors import SimDrawError
from simdraw.verify import verify

logger = logging.getLogger(__name__)

COLUMNS = ["seed", "rects", "steps", "width", "min_width", "growth", "passed"]


def corpus_report(
    count: int,
    seed: int = 0,
    min_rects: int = 5,
    max_rects: int = 60,
    pinwheel_p: float = 0.3,
    config: Optional[DrawConfig] = None,
) -> pd.DataFrame:
    """Draw and verify `count` generated instances; one row per seed."""
    rows = []
    for s, sub in corpus(count, seed, min_rects, max_rects, pinwheel_p):
        try:
            drawing = run(sub, config)
        except SimDrawError as exc:
            logger.error(f"seed {s}: construction failed: {exc}")
            rows.append({"seed": s, "rects": len(sub), "passed": False})
            continue
        report = verify(sub, drawing)
        meta = drawing.meta
        rows.append(
            {
                "seed": s,
                "rects": meta["rects"],
                "steps": meta["steps"],
                "width": meta["width"],
                "min_width": meta["min_width"],
                "growth": meta["growth"],
                "passed": report.passed,
            }
        )
        logger.info(f"seed {s}: {meta['rects']} rects, growth {meta['growth']}, passed={report.passed}")
    return pd.DataFrame(rows, columns=COLUMNS)


def summarize(df: pd.DataFrame) -> str:
    """One line per statistic of the growth column, plus the pass rate."""
    if df.empty:
        return "no instances"
    growth = df["growth"].astype(float)
    return (
        f"instances: {len(df)}  passed: {int(df['passed'].sum())}\n"
        f"growth min/median/max: {growth.min():.4g} / {growth.median():.4g} / {growth.max():.4g}"
    )


def save_report(df: pd.DataFrame, path: Union[str, Path]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    df.to_csv(path, index=False, lineterminator="\n")
    logger.info(f"Wrote corpus report ({len(df)} rows) to {path}")
