#!/usr/bin/env python
"""Compiling NOT/CNOT cascades into wire insertions.

A compiled program is a set of (host wire, NOT operator) placements; M
counts them. Gate order matters: a cascade whose gates feed each other
needs correction operators on earlier control wires.
"""
from rtwlogic import compile_circuit, interacting_chain, noninteracting_chain, parse_circuit

for label, text in [
    ("single inverter", "NOT 2"),
    ("single controlled flip", "CNOT 1 2"),
    ("pair, later gate first", "CNOT 1 2\nCNOT 0 1"),
    ("pair, earlier gate first", "CNOT 0 1\nCNOT 1 2"),
]:
    prog = compile_circuit(parse_circuit(text, n_bits=3))
    hosts = ", ".join(
        f"NOT_{i.target}@W({i.host_bit},{i.host_value})" for i in prog.sorted_insertions()
    )
    print(f"{label}: M={prog.m}  [{hosts}]")

print("\nchained cascades, both directions:")
print("length L   independent gates (M=L)   feeding gates (M=L(L+1)/2)")
for length in range(1, 9):
    low = compile_circuit(noninteracting_chain(length)).m
    high = compile_circuit(interacting_chain(length)).m
    print(f"{length:8d}   {low:22d}   {high:25d}")
