"""Counter-based keyed generator for clocked fair +-1 samples.

Every sample is a pure function of (seed, channel, tick): a SplitMix64-style
finalizer is applied twice, once to derive a per-channel stream key and once
per tick counter. This makes sampling random-access and order-independent,
so tick ranges can be evaluated in any order, in parallel, and reproduce
bit-for-bit.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX_A = 0xBF58476D1CE4E5B9
_MIX_B = 0x94D049BB133111EB

_GOLDEN_U64 = np.uint64(_GOLDEN)
_MIX_A_U64 = np.uint64(_MIX_A)
_MIX_B_U64 = np.uint64(_MIX_B)


def mix64(x: int) -> int:
    """SplitMix64 finalizer on a 64-bit integer (pure Python path)."""
    x &= _MASK64
    x ^= x >> 30
    x = (x * _MIX_A) & _MASK64
    x ^= x >> 27
    x = (x * _MIX_B) & _MASK64
    x ^= x >> 31
    return x


def _mix64_array(x: np.ndarray) -> np.ndarray:
    # In-place on a freshly allocated uint64 array; wraps mod 2**64.
    x ^= x >> np.uint64(30)
    x *= _MIX_A_U64
    x ^= x >> np.uint64(27)
    x *= _MIX_B_U64
    x ^= x >> np.uint64(31)
    return x


def stream_key(seed: int, channel: int) -> int:
    """Derive the 64-bit stream key of one channel under a seed."""
    if channel < 0:
        raise ValueError(f"channel must be non-negative, got {channel}")
    return mix64(mix64(seed) + _GOLDEN * (channel + 1))


def coin_flip(key: int, tick: int) -> int:
    """Single fair +-1 sample of the stream `key` at `tick`."""
    h = mix64(key + _GOLDEN * tick)
    return 1 if h >> 63 else -1


def coin_flips(key: int, ticks: np.ndarray) -> np.ndarray:
    """Fair +-1 samples (int8) of the stream `key` at uint64 tick counters."""
    h = np.uint64(key) + _GOLDEN_U64 * ticks
    h = _mix64_array(h)
    return np.where(h >> np.uint64(63) != 0, np.int8(1), np.int8(-1))
