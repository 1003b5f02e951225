"""NOT/CNOT cascades, their exact affine semantics over GF(2), and the
compilation into NOT-operator insertions on reference wires.

A cascade of NOT/CNOT gates acts on N-bit strings as an invertible affine
map s -> L*s xor c over GF(2). The compiler turns that map into a canonical
set of insertions: each insertion multiplies one reference wire by the NOT
operator of a target bit, and the parity of inserted operators seen by a
product string reproduces the map's flip pattern exactly, tick by tick.

Bit strings are plain Python ints with bit i = (s >> i) & 1; matrix rows are
int bitmasks over the input bits.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

NOT = "NOT"
CNOT = "CNOT"


@dataclass(frozen=True)
class Gate:
    """A single NOT or CNOT gate; `control` is None for NOT."""

    kind: str
    target: int
    control: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in (NOT, CNOT):
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if self.target < 0:
            raise ValueError(f"negative target index {self.target}")
        if self.kind == CNOT:
            if self.control is None or self.control < 0:
                raise ValueError(f"CNOT needs a non-negative control, got {self.control}")
            if self.control == self.target:
                raise ValueError(f"CNOT control equals target ({self.target})")
        elif self.control is not None:
            raise ValueError("NOT takes no control")

    def to_text(self) -> str:
        if self.kind == NOT:
            return f"NOT {self.target}"
        return f"CNOT {self.control} {self.target}"


def not_gate(target: int) -> Gate:
    return Gate(NOT, target)


def cnot(control: int, target: int) -> Gate:
    return Gate(CNOT, target, control)


@dataclass(frozen=True)
class GateCircuit:
    """An ordered cascade of gates; the first listed gate is applied first."""

    n_bits: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "gates", tuple(self.gates))
        if self.n_bits < 1:
            raise ValueError(f"n_bits must be >= 1, got {self.n_bits}")
        for g in self.gates:
            top = g.target if g.control is None else max(g.target, g.control)
            if top >= self.n_bits:
                raise ValueError(f"gate {g.to_text()!r} out of range for n_bits={self.n_bits}")

    def apply(self, string: int) -> int:
        """Step-by-step bit-level simulation of one input string."""
        s = string
        for g in self.gates:
            if g.kind == NOT:
                s ^= 1 << g.target
            elif (s >> g.control) & 1:
                s ^= 1 << g.target
        return s

    def __add__(self, other: "GateCircuit") -> "GateCircuit":
        return GateCircuit(max(self.n_bits, other.n_bits), self.gates + other.gates)

    @property
    def is_pure_cnot(self) -> bool:
        return all(g.kind == CNOT for g in self.gates)

    def to_text(self) -> str:
        return "\n".join(g.to_text() for g in self.gates)


class CircuitParseError(ValueError):
    """Unusable circuit text; carries the 1-based line number when known."""

    def __init__(self, message: str, line_number: int | None = None):
        super().__init__(message if line_number is None else f"line {line_number}: {message}")
        self.line_number = line_number


def parse_circuit(text: str, n_bits: int | None = None) -> GateCircuit:
    """Parse circuit text: one `NOT <t>` or `CNOT <c> <t>` per line.

    `#` starts a comment, blank lines are ignored. Unless `n_bits` overrides
    it, the bit count is 1 + the highest index used (1 for an empty circuit).
    """
    gates: list[Gate] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        kind = fields[0].upper()
        try:
            if kind == "NOT":
                if len(fields) != 2:
                    raise ValueError(f"NOT takes one index, got {len(fields) - 1}")
                gates.append(not_gate(_parse_index(fields[1])))
            elif kind == "CNOT":
                if len(fields) != 3:
                    raise ValueError(f"CNOT takes two indices, got {len(fields) - 1}")
                gates.append(cnot(_parse_index(fields[1]), _parse_index(fields[2])))
            else:
                raise ValueError(f"unknown gate {fields[0]!r}")
        except ValueError as exc:
            raise CircuitParseError(str(exc), lineno) from None
    highest = max((g.target if g.control is None else max(g.target, g.control) for g in gates), default=0)
    inferred = highest + 1
    if n_bits is None:
        n_bits = inferred
    elif n_bits < inferred:
        raise CircuitParseError(f"n_bits={n_bits} too small for circuit using bit {highest}")
    return GateCircuit(n_bits, tuple(gates))


def _parse_index(token: str) -> int:
    try:
        value = int(token, 10)
    except ValueError:
        raise ValueError(f"bad index {token!r}") from None
    if value < 0:
        raise ValueError(f"negative index {value}")
    return value


@dataclass(frozen=True)
class AffineMapGF2:
    """The map s -> L*s xor c over GF(2); `rows[t]` is the bitmask of input
    bits feeding output bit t, `const` the bitmask of flipped outputs."""

    n_bits: int
    rows: tuple[int, ...]
    const: int = 0

    def __post_init__(self) -> None:
        if len(self.rows) != self.n_bits:
            raise ValueError(f"expected {self.n_bits} rows, got {len(self.rows)}")
        full = (1 << self.n_bits) - 1
        if any(r & ~full for r in self.rows) or self.const & ~full:
            raise ValueError("row or const mask exceeds n_bits")

    @classmethod
    def identity(cls, n_bits: int) -> "AffineMapGF2":
        return cls(n_bits, tuple(1 << t for t in range(n_bits)))

    def apply(self, string: int) -> int:
        out = self.const
        for t, row in enumerate(self.rows):
            if (row & string).bit_count() & 1:
                out ^= 1 << t
        return out

    def then(self, other: "AffineMapGF2") -> "AffineMapGF2":
        """The composite map: apply `self` first, then `other`."""
        if other.n_bits != self.n_bits:
            raise ValueError("n_bits mismatch in composition")
        rows = []
        for t in range(self.n_bits):
            acc = 0
            r = other.rows[t]
            while r:
                k = (r & -r).bit_length() - 1
                acc ^= self.rows[k]
                r &= r - 1
            rows.append(acc)
        return AffineMapGF2(self.n_bits, tuple(rows), other.apply(self.const))

    def _row_reduce(self) -> tuple[int, ...] | None:
        # Gauss-Jordan on (rows | I); returns inverse rows or None.
        work = list(self.rows)
        aug = [1 << t for t in range(self.n_bits)]
        for col in range(self.n_bits):
            pivot = None
            for r in range(col, self.n_bits):
                if (work[r] >> col) & 1:
                    pivot = r
                    break
            if pivot is None:
                return None
            work[col], work[pivot] = work[pivot], work[col]
            aug[col], aug[pivot] = aug[pivot], aug[col]
            for r in range(self.n_bits):
                if r != col and (work[r] >> col) & 1:
                    work[r] ^= work[col]
                    aug[r] ^= aug[col]
        return tuple(aug)

    def is_invertible(self) -> bool:
        return self._row_reduce() is not None

    def inverse(self) -> "AffineMapGF2":
        inv_rows = self._row_reduce()
        if inv_rows is None:
            raise ValueError("map is not invertible over GF(2)")
        linear = AffineMapGF2(self.n_bits, inv_rows)
        return AffineMapGF2(self.n_bits, inv_rows, linear.apply(self.const))


def circuit_to_affine(circ: GateCircuit) -> AffineMapGF2:
    """Exact affine semantics of a cascade, gates composed first-listed-first."""
    rows = [1 << t for t in range(circ.n_bits)]
    const = 0
    for g in circ.gates:
        if g.kind == NOT:
            const ^= 1 << g.target
        else:
            rows[g.target] ^= rows[g.control]
            if (const >> g.control) & 1:
                const ^= 1 << g.target
    return AffineMapGF2(circ.n_bits, tuple(rows), const)


class Insertion(NamedTuple):
    """One NOT operator of `target` placed multiplicatively on the reference
    wire (host_bit, host_value)."""

    host_bit: int
    host_value: int
    target: int

    def to_dict(self) -> dict:
        return {"host_bit": self.host_bit, "host_value": self.host_value, "target": self.target}


@dataclass(frozen=True)
class InsertionProgram:
    """Canonical set of insertions; duplicate placements cancel pairwise."""

    n_bits: int
    insertions: frozenset[Insertion] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "insertions", frozenset(self.insertions))
        for ins in self.insertions:
            if not (0 <= ins.host_bit < self.n_bits and 0 <= ins.target < self.n_bits):
                raise ValueError(f"insertion {ins} out of range for n_bits={self.n_bits}")
            if ins.host_value not in (0, 1):
                raise ValueError(f"host_value must be 0 or 1, got {ins.host_value}")

    @classmethod
    def empty(cls, n_bits: int) -> "InsertionProgram":
        return cls(n_bits, frozenset())

    @classmethod
    def from_pairs(cls, n_bits: int, pairs: Iterable[tuple[int, int, int]]) -> "InsertionProgram":
        """Build a program, cancelling placements that occur an even number
        of times (two identical NOT factors multiply to 1 on every tick)."""
        counts = Counter(Insertion(*p) for p in pairs)
        return cls(n_bits, frozenset(ins for ins, k in counts.items() if k & 1))

    @property
    def m(self) -> int:
        """Hardware element count: the number of inserted NOT operators."""
        return len(self.insertions)

    def targets_on(self, bit: int, value: int) -> tuple[int, ...]:
        """Sorted targets whose NOT operator sits on wire (bit, value)."""
        return tuple(sorted(i.target for i in self.insertions if i.host_bit == bit and i.host_value == value))

    def sorted_insertions(self) -> list[Insertion]:
        return sorted(self.insertions)

    def to_dict(self) -> dict:
        return {
            "n_bits": self.n_bits,
            "insertions": [i.to_dict() for i in self.sorted_insertions()],
            "M": self.m,
        }


def compile_to_insertions(affine: AffineMapGF2) -> InsertionProgram:
    """Compile an invertible affine map into its canonical insertion program.

    For each output bit t the flip condition is f_t(b) = (row_t xor e_t).b
    xor c_t. With S the support of the linear part: c_t = 0 hosts the target
    on wire (i, 1) for every i in S; c_t = 1 moves the smallest host to its
    value-0 wire (or, when S is empty, hosts on both wires of bit t). The
    parity of NOT factors picked up by any product string then equals f_t.
    """
    if not affine.is_invertible():
        raise ValueError("cannot compile a non-invertible map")
    pairs: list[tuple[int, int, int]] = []
    for t in range(affine.n_bits):
        mask = affine.rows[t] ^ (1 << t)
        support = [i for i in range(affine.n_bits) if (mask >> i) & 1]
        if not (affine.const >> t) & 1:
            pairs.extend((i, 1, t) for i in support)
        elif support:
            pairs.append((support[0], 0, t))
            pairs.extend((i, 1, t) for i in support[1:])
        else:
            pairs.append((t, 0, t))
            pairs.append((t, 1, t))
    return InsertionProgram.from_pairs(affine.n_bits, pairs)


def compile_circuit(circ: GateCircuit) -> InsertionProgram:
    return compile_to_insertions(circuit_to_affine(circ))


def hardware_count(prog: InsertionProgram) -> int:
    return prog.m


def affine_of_program(prog: InsertionProgram) -> AffineMapGF2:
    """Recover the affine map an insertion program realizes.

    Every host of target t contributes its bit to the linear flip mask
    (value-0 hosts select on the complement, adding 1 to the constant), so
    the map is a function of the canonical insertion set alone.
    """
    rows = [1 << t for t in range(prog.n_bits)]
    const = 0
    for ins in prog.insertions:
        rows[ins.target] ^= 1 << ins.host_bit
        if ins.host_value == 0:
            const ^= 1 << ins.target
    return AffineMapGF2(prog.n_bits, tuple(rows), const)


def noninteracting_chain(length: int) -> GateCircuit:
    """Chained CNOTs applied top-down so no gate writes a later control:
    [CNOT L-1 L, CNOT L-2 L-1, ..., CNOT 0 1] over length+1 bits."""
    if length < 1:
        raise ValueError("chain length must be >= 1")
    return GateCircuit(length + 1, tuple(cnot(i, i + 1) for i in reversed(range(length))))


def interacting_chain(length: int) -> GateCircuit:
    """Chained CNOTs applied bottom-up so each gate feeds the next control:
    [CNOT 0 1, CNOT 1 2, ..., CNOT L-1 L] over length+1 bits."""
    if length < 1:
        raise ValueError("chain length must be >= 1")
    return GateCircuit(length + 1, tuple(cnot(i, i + 1) for i in range(length)))


def random_cnot_cascade(rng: random.Random, n_bits: int, n_gates: int) -> GateCircuit:
    """Uniform random CNOT-only cascade (control != target)."""
    gates = []
    for _ in range(n_gates):
        c, t = rng.sample(range(n_bits), 2)
        gates.append(cnot(c, t))
    return GateCircuit(n_bits, tuple(gates))


@dataclass(frozen=True)
class ScanViolation:
    """A sampled cascade whose hardware count fell outside the scan bounds."""

    circuit_text: str
    m: int
    bound: str  # "lower" or "upper"

    def to_dict(self) -> dict:
        return {"circuit": self.circuit_text.splitlines(), "M": self.m, "bound": self.bound}


@dataclass
class ConjectureScanReport:
    """Hardware counts of random CNOT cascades against L <= M <= L(L+1)/2."""

    n_gates: int
    n_bits: int
    samples: int
    seed: int
    min_m: int
    max_m: int
    histogram: dict[int, int]
    violations: list[ScanViolation] = field(default_factory=list)

    @property
    def lower_bound(self) -> int:
        return self.n_gates

    @property
    def upper_bound(self) -> int:
        return self.n_gates * (self.n_gates + 1) // 2

    @property
    def violation_count(self) -> int:
        return len(self.violations)

    def to_dict(self) -> dict:
        return {
            "n_gates": self.n_gates,
            "n_bits": self.n_bits,
            "samples": self.samples,
            "seed": self.seed,
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "min_M": self.min_m,
            "max_M": self.max_m,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "violations": [v.to_dict() for v in self.violations],
        }


def conjecture_scan(n_gates: int, n_bits: int, samples: int, seed: int = 0) -> ConjectureScanReport:
    """Compile random CNOT cascades and flag every bound violation verbatim.

    Violations are findings, not failures: cascades with cancelling gate
    pairs legitimately compile below the lower bound.
    """
    if n_gates < 1:
        raise ValueError("n_gates must be >= 1")
    if n_bits < 2:
        raise ValueError("need n_bits >= 2 for CNOT gates")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = random.Random(seed)
    lower = n_gates
    upper = n_gates * (n_gates + 1) // 2
    histogram: Counter[int] = Counter()
    violations: list[ScanViolation] = []
    for _ in range(samples):
        circ = random_cnot_cascade(rng, n_bits, n_gates)
        m = compile_circuit(circ).m
        histogram[m] += 1
        if m < lower:
            violations.append(ScanViolation(circ.to_text(), m, "lower"))
        elif m > upper:
            violations.append(ScanViolation(circ.to_text(), m, "upper"))
    return ConjectureScanReport(
        n_gates=n_gates,
        n_bits=n_bits,
        samples=samples,
        seed=seed,
        min_m=min(histogram),
        max_m=max(histogram),
        histogram=dict(histogram),
        violations=violations,
    )
