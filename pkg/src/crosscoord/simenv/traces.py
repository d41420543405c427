"""Synthetic signal traces standing in for live testbed measurements.

User requests arrive as uniformly random resolution-level picks at a
fixed cadence; per-band achievable rates and the end-to-end bandwidth
follow mean-reverting AR(1) series clipped at zero. All generators are
pure functions of the config (seed included), one independent stream
per signal.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ..errors import ConfigurationError

DEFAULT_LEVELS = ("360p", "480p", "640p", "720p", "1080p")
DEFAULT_BANDS = ("n1", "n2", "n3", "n5", "n7")
# per-band mean rates descend with band index so band choice is a real decision
DEFAULT_BAND_MEANS = (30.0, 26.0, 22.0, 18.0, 14.0)

_REQUEST_STREAM = 0
_BAND_STREAM_BASE = 1
_BANDWIDTH_STREAM = 100


@dataclass(frozen=True)
class TraceConfig:
    seed: int = 0
    duration_s: float = 400.0
    request_interval_s: float = 5.0
    sample_period_s: float = 1.0
    levels: tuple[str, ...] = DEFAULT_LEVELS
    bands: tuple[str, ...] = DEFAULT_BANDS
    band_means: tuple[float, ...] = DEFAULT_BAND_MEANS
    band_ar: float = 0.9
    band_noise_std: float = 2.0
    bandwidth_mean: float = 50.0
    bandwidth_ar: float = 0.9
    bandwidth_noise_std: float = 2.0

    def __post_init__(self):
        if not self.levels or not self.bands:
            raise ConfigurationError("level and band lists must be non-empty")
        if len(self.band_means) != len(self.bands):
            raise ConfigurationError("need one mean rate per band")
        if not (abs(self.band_ar) < 1.0 and abs(self.bandwidth_ar) < 1.0):
            raise ConfigurationError("AR(1) coefficients must satisfy |phi| < 1")
        if not (self.band_noise_std > 0.0 and self.bandwidth_noise_std > 0.0):
            raise ConfigurationError("noise standard deviations must be positive")
        if self.duration_s < self.request_interval_s:
            raise ConfigurationError("duration must cover at least one request interval")
        if self.sample_period_s <= 0.0 or self.request_interval_s <= 0.0:
            raise ConfigurationError("periods must be positive")


@dataclass(frozen=True)
class Trace:
    name: str
    period_s: float
    unit: str
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        v = np.ascontiguousarray(self.values, dtype=np.float64)
        if v.ndim != 1 or v.size == 0 or not np.all(np.isfinite(v)):
            raise ConfigurationError(f"trace {self.name!r} must be non-empty and finite")
        object.__setattr__(self, "values", v)


def _ar1(mean: float, phi: float, sigma: float, n: int, rng: np.random.Generator) -> np.ndarray:
    values = np.empty(n)
    noise = rng.normal(0.0, sigma, n)
    x = mean
    for k in range(n):
        values[k] = x
        x = mean + phi * (x - mean) + noise[k]
        if x < 0.0:
            x = 0.0
    return values


def generate_user_requests(cfg: TraceConfig) -> Trace:
    """One uniformly random level index per request interval."""
    n = int(cfg.duration_s // cfg.request_interval_s)
    rng = np.random.default_rng([cfg.seed, _REQUEST_STREAM])
    values = rng.integers(0, len(cfg.levels), n).astype(np.float64)
    return Trace("requests", cfg.request_interval_s, "level", values)


def generate_band_rate_traces(cfg: TraceConfig) -> list[Trace]:
    """One AR(1) achievable-rate series per configured band."""
    n = int(cfg.duration_s // cfg.sample_period_s)
    traces = []
    for i, (band, mean) in enumerate(zip(cfg.bands, cfg.band_means)):
        rng = np.random.default_rng([cfg.seed, _BAND_STREAM_BASE + i])
        values = _ar1(mean, cfg.band_ar, cfg.band_noise_std, n, rng)
        traces.append(Trace(f"band_{band}", cfg.sample_period_s, "mbps", values))
    return traces


def generate_bandwidth_trace(cfg: TraceConfig) -> Trace:
    """End-to-end achievable-bandwidth AR(1) series."""
    n = int(cfg.duration_s // cfg.sample_period_s)
    rng = np.random.default_rng([cfg.seed, _BANDWIDTH_STREAM])
    values = _ar1(cfg.bandwidth_mean, cfg.bandwidth_ar, cfg.bandwidth_noise_std, n, rng)
    return Trace("bandwidth", cfg.sample_period_s, "mbps", values)


def generate_all_traces(cfg: TraceConfig) -> dict[str, Trace]:
    """Every signal keyed by name: requests, band_*, bandwidth."""
    traces = {"requests": generate_user_requests(cfg)}
    for trace in generate_band_rate_traces(cfg):
        traces[trace.name] = trace
    traces["bandwidth"] = generate_bandwidth_trace(cfg)
    return traces


def write_trace_csv(trace: Trace, path: str | Path) -> None:
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["signal", "period_s", "unit"])
        writer.writerow([trace.name, repr(trace.period_s), trace.unit])
        for value in trace.values:
            writer.writerow([repr(float(value))])


def read_trace_csv(path: str | Path) -> Trace:
    path = Path(path)
    with path.open("r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header != ["signal", "period_s", "unit"]:
            raise ConfigurationError(f"{path}: unexpected trace header {header!r}")
        name, period_s, unit = next(reader)
        values = [float(row[0]) for row in reader if row]
    return Trace(name, float(period_s), unit, np.array(values))
