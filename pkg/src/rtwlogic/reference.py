"""The clocked +-1 reference system and its measured statistical identities.

A system of N logic bits is fed by 2N independent telegraph sources, one
wire per (bit, value). Each wire holds a fair +-1 value that is redrawn
every clock tick; everything downstream (products, sums, gate programs) is
exact integer arithmetic on these samples.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

from .compiler import InsertionProgram
from .report import StatEntry, StatReport
from .rng import coin_flips, stream_key

MAX_BITS = 32
DEFAULT_SEED = 42


def as_tick_array(ticks) -> tuple[np.ndarray, bool]:
    """Normalize ticks to a uint64 array; the flag marks scalar input."""
    scalar = isinstance(ticks, (int, np.integer))
    arr = np.atleast_1d(np.asarray(ticks))
    if arr.dtype.kind not in "iu":
        raise ValueError(f"ticks must be integers, got dtype {arr.dtype}")
    if arr.dtype.kind == "i" and arr.size and int(arr.min()) < 0:
        raise ValueError("ticks must be non-negative")
    return arr.astype(np.uint64, copy=False), scalar


def tick_range(n_ticks: int) -> np.ndarray:
    """The tick window [0, n_ticks) as a uint64 array."""
    if n_ticks < 1:
        raise ValueError(f"need at least one tick, got {n_ticks}")
    return np.arange(n_ticks, dtype=np.uint64)


@dataclass(frozen=True)
class ReferenceSystem:
    """Bank of 2*n_bits independent clocked +-1 sources, determined by seed.

    Sampling is random-access: the value at any (wire, tick) is computed
    directly, without generating earlier ticks, so evaluation order never
    affects results.
    """

    n_bits: int
    seed: int = DEFAULT_SEED

    def __post_init__(self) -> None:
        if not 1 <= self.n_bits <= MAX_BITS:
            raise ValueError(f"n_bits must be in [1, {MAX_BITS}], got {self.n_bits}")

    def _check_bit(self, bit: int) -> None:
        if not 0 <= bit < self.n_bits:
            raise ValueError(f"bit index {bit} out of range for n_bits={self.n_bits}")

    def _wire_key(self, bit: int, value: int) -> int:
        self._check_bit(bit)
        if value not in (0, 1):
            raise ValueError(f"bit value must be 0 or 1, got {value}")
        return stream_key(self.seed, 2 * bit + value)

    def sample(self, bit: int, value: int, ticks):
        """+-1 sample(s) of the reference wire (bit, value)."""
        key = self._wire_key(bit, value)
        arr, scalar = as_tick_array(ticks)
        out = coin_flips(key, arr)
        return int(out[0]) if scalar else out

    def not_operator(self, bit: int, ticks):
        """The NOT operator of `bit`: the product of both its wires.

        Multiplying any product-string signal by it swaps that string's
        bit factor between the value-0 and value-1 wires.
        """
        arr, scalar = as_tick_array(ticks)
        out = coin_flips(self._wire_key(bit, 0), arr) * coin_flips(self._wire_key(bit, 1), arr)
        return int(out[0]) if scalar else out

    def effective_sample(self, prog: InsertionProgram | None, bit: int, value: int, ticks):
        """Wire (bit, value) after applying a program's inserted NOT operators."""
        if prog is None:
            return self.sample(bit, value, ticks)
        if prog.n_bits != self.n_bits:
            raise ValueError(f"program n_bits={prog.n_bits} does not match system n_bits={self.n_bits}")
        arr, scalar = as_tick_array(ticks)
        out = coin_flips(self._wire_key(bit, value), arr)
        for target in prog.targets_on(bit, value):
            out = out * self.not_operator(target, arr)
        return int(out[0]) if scalar else out

    def wire_table(self, prog: InsertionProgram | None, ticks: np.ndarray) -> np.ndarray:
        """All effective wire samples as an int8 array of shape (n_bits, 2, T).

        NOT-operator streams are computed once and multiplied into every
        hosting wire, so the cost is O((2N + M) * T).
        """
        arr, _ = as_tick_array(ticks)
        table = np.empty((self.n_bits, 2, arr.size), dtype=np.int8)
        for bit in range(self.n_bits):
            for value in (0, 1):
                table[bit, value] = coin_flips(self._wire_key(bit, value), arr)
        if prog is not None:
            if prog.n_bits != self.n_bits:
                raise ValueError(f"program n_bits={prog.n_bits} does not match system n_bits={self.n_bits}")
            # Operators are products of the raw reference wires, so build them
            # all before any host wire gets modified.
            operators = {
                target: table[target, 0] * table[target, 1]
                for target in {ins.target for ins in prog.insertions}
            }
            for ins in prog.insertions:
                table[ins.host_bit, ins.host_value] *= operators[ins.target]
        return table


def sample_wire(sys: ReferenceSystem, wire: tuple[int, int], ticks):
    """Free-function form of ReferenceSystem.sample for a (bit, value) pair."""
    return sys.sample(wire[0], wire[1], ticks)


def not_operator_sample(sys: ReferenceSystem, bit: int, ticks):
    return sys.not_operator(bit, ticks)


def effective_wire_sample(sys: ReferenceSystem, prog: InsertionProgram | None, wire: tuple[int, int], ticks):
    return sys.effective_sample(prog, wire[0], wire[1], ticks)


def orthogonality_report(sys: ReferenceSystem, ticks: int) -> StatReport:
    """Empirical means behind the zero-mean and orthogonality identities.

    Covers every single wire, every distinct wire pair product, the
    same-wire squares (exactly 1), and product-vs-factor correlations.
    Mean estimators carry a 5/sqrt(T) tolerance; squares carry zero.
    """
    if ticks < 1:
        raise ValueError(f"need at least one tick, got {ticks}")
    window = tick_range(ticks)
    wires = [(bit, value) for bit in range(sys.n_bits) for value in (0, 1)]
    samples = {w: sys.sample(w[0], w[1], window) for w in wires}
    tol = 5.0 / sqrt(ticks)
    entries: list[StatEntry] = []
    for w in wires:
        entries.append(StatEntry(f"mean[W{w}]", float(samples[w].mean()), 0.0, tol, ticks))
    for w in wires:
        sq = samples[w].astype(np.int16) ** 2
        entries.append(StatEntry(f"mean[W{w}^2]", float(sq.mean()), 1.0, 0.0, ticks))
    for a in range(len(wires)):
        for b in range(a + 1, len(wires)):
            wa, wb = wires[a], wires[b]
            prod = samples[wa] * samples[wb]
            entries.append(StatEntry(f"mean[W{wa}*W{wb}]", float(prod.mean()), 0.0, tol, ticks))
            # The product is itself a fair telegraph wave; correlating it
            # against either factor reduces to the other factor's mean.
            entries.append(
                StatEntry(f"corr[W{wa}*W{wb}, W{wa}]", float((prod * samples[wa]).mean()), 0.0, tol, ticks)
            )
            entries.append(
                StatEntry(f"corr[W{wa}*W{wb}, W{wb}]", float((prod * samples[wb]).mean()), 0.0, tol, ticks)
            )
    return StatReport(entries)
