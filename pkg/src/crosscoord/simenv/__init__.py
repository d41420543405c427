"""Synthetic trace generation and per-agent dataset assembly."""

from .datasets import (
    DatasetSplit,
    SamplePool,
    SignalDescriptor,
    build_datasets,
    load_manifest_traces,
    window_series,
    write_dataset_manifest,
)
from .traces import (
    Trace,
    TraceConfig,
    generate_all_traces,
    generate_band_rate_traces,
    generate_bandwidth_trace,
    generate_user_requests,
    read_trace_csv,
    write_trace_csv,
)

__all__ = [
    "DatasetSplit",
    "SamplePool",
    "SignalDescriptor",
    "Trace",
    "TraceConfig",
    "build_datasets",
    "generate_all_traces",
    "generate_band_rate_traces",
    "generate_bandwidth_trace",
    "generate_user_requests",
    "load_manifest_traces",
    "read_trace_csv",
    "window_series",
    "write_dataset_manifest",
    "write_trace_csv",
]
