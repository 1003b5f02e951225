#!/usr/bin/env python
"""Reading out whether a string belongs to a (transformed) superposition.

Correlating the superposition's signal against a probe string's signal
averages to the probe's coefficient; orthogonality kills every other term.
This is statistical - the only statistical operation here - with a
5*sqrt(A/T) band for A the sum of squared coefficients.
"""
from rtwlogic import (
    ReferenceSystem,
    Superposition,
    circuit_to_affine,
    compile_circuit,
    format_bits,
    membership_coefficient,
    membership_estimate,
    parse_circuit,
)

N, T = 6, 400_000
system = ReferenceSystem(N, seed=42)
members = [0b000011, 0b010101, 0b100110, 0b111000]
y = Superposition.from_strings(N, members)
circ = parse_circuit("CNOT 0 1\nNOT 5", n_bits=N)
prog = compile_circuit(circ)
amap = circuit_to_affine(circ)

# the program moved every member; probe the images and two strangers
probes = [amap.apply(s) for s in members] + [0b111111, members[0]]
print(f"|Y|={len(members)}, after a 2-gate program, T={T}:")
for probe in probes:
    want = membership_coefficient(prog, y, probe)
    entry = membership_estimate(system, prog, y, probe, T).entries[0]
    print(f"  probe {format_bits(probe, N)}: estimate {entry.estimate:+.4f}"
          f"  true coefficient {want}  (band {entry.tolerance:.4f})")
