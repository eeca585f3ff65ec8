"""
Sweep CSV writing and run output persistence.
"""

import csv
import io
import json
import logging
import re
from dataclasses import dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Iterable, Optional, TextIO, Tuple

from config.settings import settings
from .. import __version__
from ..montecarlo import SweepCurve, SweepPoint
from .documents import SweepMetadata, SweepPointModel

logger = logging.getLogger(__name__)

CSV_HEADER = ["k", "trials", "successes", "p_hat", "ci_low", "ci_high"]
FLOAT_DIGITS = 6


def _fmt(value: float) -> str:
    return f"{value:.{FLOAT_DIGITS}f}"


def write_sweep_csv(points: Iterable[SweepPoint], stream: TextIO) -> None:
    """Write the fixed-header CSV; floats use a fixed number of digits."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for point in points:
        writer.writerow([point.k, point.trials, point.successes,
                         _fmt(point.p_hat), _fmt(point.ci_low), _fmt(point.ci_high)])


def sweep_csv_text(points: Iterable[SweepPoint]) -> str:
    buffer = io.StringIO()
    write_sweep_csv(points, buffer)
    return buffer.getvalue()


def sweep_metadata(curve: SweepCurve, config: Dict[str, Any], include_points: bool = False) -> SweepMetadata:
    return SweepMetadata(
        version=__version__,
        group_spec=curve.group_spec,
        variant=curve.variant.value,
        master_seed=curve.master_seed,
        m_ratio=curve.m_ratio,
        theta=curve.theta,
        critical_prediction=curve.critical_prediction,
        crossing_k=curve.crossing_k,
        crossing_found=curve.crossing_found,
        prediction_ratio=curve.prediction_ratio,
        config=config,
        points=[SweepPointModel(**point.to_dict()) for point in curve.points] if include_points else None,
    )


def _safe_dirname(spec: str) -> str:
    return re.sub(r"[^A-Za-z0-9._-]+", "_", spec).strip("_") or "group"


@dataclass
class SweepRunOutput:
    """A finished sweep plus the configuration that produced it."""
    curve: SweepCurve
    config: Dict[str, Any] = field(default_factory=dict)
    created_at: datetime = field(default_factory=datetime.now)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "created_at": self.created_at.isoformat(),
            "metadata": sweep_metadata(self.curve, self.config).model_dump(mode="json"),
            "curve": self.curve.to_dict(),
        }

    def save(self, output_dir: Optional[Path] = None) -> Tuple[Path, Path]:
        """Save CSV and metadata JSON under a per-group directory."""
        base_output_dir = Path(output_dir or settings.output_dir)
        group_dir = base_output_dir / _safe_dirname(self.curve.group_spec)
        group_dir.mkdir(parents=True, exist_ok=True)

        timestamp = self.created_at.strftime("%Y-%m-%d_%H%M%S")
        stem = f"{timestamp}_{self.curve.variant.value}_sweep"
        csv_path = group_dir / f"{stem}.csv"
        json_path = group_dir / f"{stem}.json"

        with open(csv_path, "w", encoding="utf-8", newline="") as f:
            write_sweep_csv(self.curve.points, f)
        with open(json_path, "w", encoding="utf-8") as f:
            json.dump(sweep_metadata(self.curve, self.config).model_dump(mode="json"), f, indent=2)

        logger.info(f"Saved sweep output to {csv_path}")
        return csv_path, json_path
