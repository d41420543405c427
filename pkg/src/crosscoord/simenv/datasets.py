"""Window datasets built from traces, split per agent.

Sliding windows of length w predict the next value. Each layer's agent
gets the windows of its own signals: application <- requests, physical
<- all band rates (band-tagged), network <- bandwidth. Windows are
standardized per signal (affine transform kept in the descriptor, so
predictions can be mapped back to physical units and fresh population
samples can be drawn from the same law).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from ..errors import ConfigurationError
from .traces import Trace, TraceConfig, generate_all_traces, read_trace_csv, write_trace_csv

LAYERS = ("application", "physical", "network")


@dataclass(frozen=True)
class SignalDescriptor:
    """Generating law and standardization transform of one signal."""

    name: str
    kind: str  # "uniform-levels" | "ar1"
    unit: str
    offset: float
    scale: float
    tail: np.ndarray  # last w standardized values, for sensing
    mean: float = 0.0
    phi: float = 0.0
    sigma: float = 0.0
    n_levels: int = 0

    def to_physical(self, standardized: float) -> float:
        return standardized * self.scale + self.offset

    def simulate(self, n: int, rng: np.random.Generator) -> np.ndarray:
        """Fresh raw-valued series of length n from the signal's law."""
        if self.kind == "uniform-levels":
            return rng.integers(0, self.n_levels, n).astype(np.float64)
        if self.kind == "ar1":
            sigma_stat = self.sigma / np.sqrt(1.0 - self.phi**2)
            values = np.empty(n)
            x = float(rng.normal(self.mean, sigma_stat))
            x = max(x, 0.0)
            noise = rng.normal(0.0, self.sigma, n)
            for k in range(n):
                values[k] = x
                x = self.mean + self.phi * (x - self.mean) + noise[k]
                if x < 0.0:
                    x = 0.0
            return values
        raise ConfigurationError(f"unknown signal kind {self.kind!r}")


@dataclass
class SamplePool:
    inputs: np.ndarray  # (n, w) standardized windows
    targets: np.ndarray  # (n,) standardized next values
    tags: np.ndarray  # (n,) signal index within the split's descriptor list

    def __len__(self) -> int:
        return self.targets.shape[0]


@dataclass
class DatasetSplit:
    """Train/holdout window pools for one agent, plus signal descriptors.

    ``reads`` counts pool accesses; the isolation tests use it to verify
    that no agent ever touches another agent's data.
    """

    train: SamplePool
    holdout: SamplePool
    signals: list[SignalDescriptor]
    window: int
    reads: int = field(default=0, compare=False)

    @property
    def train_size(self) -> int:
        return len(self.train)

    def fetch_train(self, index: int) -> tuple[np.ndarray, np.ndarray]:
        self.reads += 1
        return self.train.inputs[index : index + 1], self.train.targets[index : index + 1]

    def fetch_train_all(self) -> tuple[np.ndarray, np.ndarray]:
        self.reads += 1
        return self.train.inputs, self.train.targets

    def sample_population(self, n: int, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
        """Fresh standardized (windows, targets) drawn from the signal laws.

        The draw splits n across the agent's signals and windows a fresh
        simulated path per signal, mirroring how deployment data arises.
        """
        per = max(1, n // len(self.signals))
        xs, ys = [], []
        for desc in self.signals:
            raw = desc.simulate(per + self.window, rng)
            std = (raw - desc.offset) / desc.scale
            win, tgt = window_series(std, self.window)
            xs.append(win)
            ys.append(tgt)
        return np.concatenate(xs, axis=0), np.concatenate(ys)


def window_series(values: np.ndarray, window: int) -> tuple[np.ndarray, np.ndarray]:
    """All length-w sliding windows with next-value targets."""
    n = values.shape[0] - window
    if n < 1:
        raise ConfigurationError(f"trace of length {values.shape[0]} too short for window {window}")
    idx = np.arange(n)[:, None] + np.arange(window)[None, :]
    return values[idx], values[window:]


def _describe(trace: Trace, cfg: TraceConfig, window: int) -> SignalDescriptor:
    values = trace.values
    offset = float(values.mean())
    scale = float(max(values.std(), 1e-9))
    tail = (values[-window:] - offset) / scale
    if trace.name == "requests":
        return SignalDescriptor(
            trace.name, "uniform-levels", trace.unit, offset, scale, tail,
            n_levels=len(cfg.levels),
        )
    if trace.name == "bandwidth":
        mean, phi, sigma = cfg.bandwidth_mean, cfg.bandwidth_ar, cfg.bandwidth_noise_std
    else:
        band = trace.name.removeprefix("band_")
        mean = cfg.band_means[cfg.bands.index(band)]
        phi, sigma = cfg.band_ar, cfg.band_noise_std
    return SignalDescriptor(
        trace.name, "ar1", trace.unit, offset, scale, tail, mean=mean, phi=phi, sigma=sigma
    )


def _split_pool(
    inputs: np.ndarray,
    targets: np.ndarray,
    tags: np.ndarray,
    split_fraction: float,
    rng: np.random.Generator,
) -> tuple[SamplePool, SamplePool]:
    n = targets.shape[0]
    n_train = int(np.floor(split_fraction * n))
    if n_train < 1 or n_train >= n:
        raise ConfigurationError(f"split of {n} windows at {split_fraction} leaves an empty pool")
    perm = rng.permutation(n)
    tr, ho = perm[:n_train], perm[n_train:]
    return (
        SamplePool(inputs[tr], targets[tr], tags[tr]),
        SamplePool(inputs[ho], targets[ho], tags[ho]),
    )


def build_datasets(
    traces: dict[str, Trace],
    cfg: TraceConfig,
    window: int,
    split_fraction: float,
    seed: int,
) -> dict[str, DatasetSplit]:
    """Per-layer dataset splits from generated traces."""
    if not 0.0 < split_fraction < 1.0:
        raise ConfigurationError("split fraction must lie in (0, 1)")
    grouping = {
        "application": ["requests"],
        "physical": [f"band_{b}" for b in cfg.bands],
        "network": ["bandwidth"],
    }
    splits: dict[str, DatasetSplit] = {}
    for layer_index, (layer, names) in enumerate(grouping.items()):
        descriptors, xs, ys, tags = [], [], [], []
        for sig_index, name in enumerate(names):
            if name not in traces:
                raise ConfigurationError(f"missing trace {name!r}")
            desc = _describe(traces[name], cfg, window)
            std = (traces[name].values - desc.offset) / desc.scale
            win, tgt = window_series(std, window)
            descriptors.append(desc)
            xs.append(win)
            ys.append(tgt)
            tags.append(np.full(tgt.shape[0], sig_index, dtype=np.int64))
        rng = np.random.default_rng([seed, 0x5E7, layer_index])
        train, holdout = _split_pool(
            np.concatenate(xs, axis=0),
            np.concatenate(ys),
            np.concatenate(tags),
            split_fraction,
            rng,
        )
        splits[layer] = DatasetSplit(train, holdout, descriptors, window)
    return splits


def write_dataset_manifest(
    directory: str | Path,
    traces: dict[str, Trace],
    window: int,
    split_fraction: float,
    seed: int,
) -> Path:
    """Write trace CSVs plus a manifest from which datasets are reproduced."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    files = {}
    for name, trace in traces.items():
        filename = f"{name}.csv"
        write_trace_csv(trace, directory / filename)
        files[name] = filename
    manifest = {
        "traces": files,
        "window": window,
        "split_fraction": split_fraction,
        "seed": seed,
    }
    path = directory / "manifest.json"
    path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    return path


def load_manifest_traces(path: str | Path) -> tuple[dict[str, Trace], dict]:
    path = Path(path)
    manifest = json.loads(path.read_text(encoding="utf-8"))
    traces = {
        name: read_trace_csv(path.parent / filename)
        for name, filename in manifest["traces"].items()
    }
    return traces, manifest
