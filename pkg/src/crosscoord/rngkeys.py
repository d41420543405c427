"""Keyed, order-independent random draws.

Sample selection inside the coordination loop is keyed by
(seed, agent index, iteration, sample slot) rather than drawn from a
sequential stream, so results do not depend on evaluation order and the
per-agent draws can run concurrently. Keys are mixed with SplitMix64,
which is deterministic across platforms (pure 64-bit integer math).
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK
    return x ^ (x >> 31)


def mix_key(seed: int, agent: int, iteration: int, slot: int) -> int:
    """Collapse a (seed, agent, iteration, slot) key into one 64-bit word."""
    h = _splitmix64(seed & _MASK)
    h = _splitmix64(h ^ ((agent + 1) & _MASK))
    h = _splitmix64(h ^ ((iteration + 1) & _MASK))
    h = _splitmix64(h ^ ((slot + 1) & _MASK))
    return h


def sample_index(seed: int, agent: int, iteration: int, slot: int, pool_size: int) -> int:
    """Deterministic uniform index into a pool of ``pool_size`` items.

    Modulo bias is negligible for pool sizes far below 2^64.
    """
    if pool_size <= 0:
        raise ValueError("pool_size must be positive")
    return mix_key(seed, agent, iteration, slot) % pool_size
