#!/usr/bin/env python
"""Reference wires, product strings, and the zero-problem.

Every (bit, value) wire is an independent clocked +-1 source. A product
string multiplies one wire per bit; a superposition sums product signals.
The universe factorizes, so its 2^N terms cost O(N) per tick - but most
ticks it reads exactly 0.
"""
from rtwlogic import (
    ReferenceSystem,
    Superposition,
    superposition_sample,
    tick_range,
    zero_fraction,
)

sys4 = ReferenceSystem(4, seed=42)
window = tick_range(12)

print("reference wires (bit, value) over 12 ticks:")
for bit in range(2):
    for value in (0, 1):
        print(f"  W({bit},{value}):", sys4.sample(bit, value, window))

one_string = Superposition.explicit(4, {0b0101: 1})
print("\nsingle product string 1010:", superposition_sample(sys4, None, one_string, window))

universe = Superposition.universe(4)
print("universe signal:          ", superposition_sample(sys4, None, universe, window))
print("(nonzero only when every bit's wire pair agrees; then it hits +-16)")

# how often is the universe exactly zero? 1 - 2^-N of the time
for n_bits in (2, 6, 10):
    entry = zero_fraction(ReferenceSystem(n_bits, 42), Superposition.universe(n_bits), 200_000).entries[0]
    print(f"N={n_bits:2d}: zero fraction {entry.estimate:.5f}  expected {entry.expected:.5f}")
