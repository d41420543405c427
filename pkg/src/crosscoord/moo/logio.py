"""Line-delimited JSON serialization of trajectory logs."""

from __future__ import annotations

import json
from pathlib import Path

from .optimizer import MetricRecord, TrajectoryLog


def record_to_dict(record: MetricRecord) -> dict:
    """The wire form of one per-iteration record."""
    return {
        "t": record.t,
        "gamma": list(record.gamma),
        "losses": list(record.losses),
        "c_error": record.c_error,
        "g_error": record.g_error,
        "pareto_gap": record.pareto_gap,
    }


def dump_trajectory(log: TrajectoryLog, path: str | Path) -> None:
    path = Path(path)
    with path.open("w", encoding="utf-8") as fh:
        for record in log.records:
            fh.write(json.dumps(record_to_dict(record), sort_keys=True))
            fh.write("\n")


def load_trajectory(path: str | Path) -> list[dict]:
    with Path(path).open("r", encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]
