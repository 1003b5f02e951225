"""Command-line front end.

Exit codes are a stable scripting contract: 0 on success, 1 when a
requested check fails, 2 on usage or parse errors. Every run is
reproducible from the command line alone; seeds default to a fixed
constant, and `--random-seed` (which draws from OS entropy) prints the
drawn seed so the run can be replayed.
"""

from __future__ import annotations

import argparse
import json
import secrets
import sys
from pathlib import Path

from .compiler import (
    CircuitParseError,
    compile_circuit,
    conjecture_scan,
    parse_circuit,
)
from .hyperspace import parse_superposition, superposition_sample
from .reference import (
    DEFAULT_SEED,
    ReferenceSystem,
    orthogonality_report,
    tick_range,
)
from .verify import canonical_suite, random_equivalence_trials

USAGE_ERROR = 2
CHECK_FAILURE = 1


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _add_seed_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument(
        "--seed", type=_nonnegative, default=DEFAULT_SEED,
        help=f"reference-system seed (default {DEFAULT_SEED})",
    )
    group.add_argument(
        "--random-seed", action="store_true",
        help="draw the seed from OS entropy and print it for replay",
    )


def _resolve_seed(args: argparse.Namespace) -> int:
    if getattr(args, "random_seed", False):
        seed = secrets.randbits(63)
        print(f"seed: {seed}")
        return seed
    return args.seed


def _read_circuit(path: str, n_bits: int | None):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CircuitParseError(str(exc)) from exc
    return parse_circuit(text, n_bits=n_bits)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        print(text)
    else:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")


def cmd_compile(args: argparse.Namespace) -> int:
    circ = _read_circuit(args.circuit, args.n)
    program = compile_circuit(circ)
    _emit(json.dumps(program.to_dict(), indent=2), args.out)
    return 0


def cmd_simulate(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args)
    system = ReferenceSystem(args.n, seed)
    y = parse_superposition(args.superposition, n_bits=args.n)
    circuit_lines = None
    program = None
    if args.circuit is not None:
        circ = _read_circuit(args.circuit, args.n)
        program = compile_circuit(circ)
        circuit_lines = circ.to_text().splitlines()
    signal = superposition_sample(system, program, y, tick_range(args.ticks))
    if args.format == "csv":
        rows = ["tick,signal"]
        rows.extend(f"{tick},{value}" for tick, value in enumerate(signal.tolist()))
        _emit("\n".join(rows), args.out)
    else:
        payload = {
            "n_bits": args.n,
            "seed": seed,
            "ticks": args.ticks,
            "superposition": y.to_text(),
            "circuit": circuit_lines,
            "signals": signal.tolist(),
        }
        _emit(json.dumps(payload, indent=2), args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args)
    if args.suite == "figures":
        report = canonical_suite(seed, ticks=args.ticks)
        lines = report.lines()
    else:
        report = random_equivalence_trials(
            args.trials, seeds=(seed,), ticks=args.ticks, draw_seed=seed
        )
        lines = report.lines()
    print("\n".join(lines))
    return 0 if report.passed else CHECK_FAILURE


def cmd_stats(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args)
    report = orthogonality_report(ReferenceSystem(args.n, seed), args.ticks)
    print("\n".join(report.lines()))
    wires = 2 * args.n
    print(f"{len(report.entries)} estimators over {wires} wires, "
          f"{len(report.failures())} outside tolerance")
    return 0 if report.passed else CHECK_FAILURE


def cmd_conjecture(args: argparse.Namespace) -> int:
    seed = _resolve_seed(args)
    report = conjecture_scan(args.gates, args.bits, args.samples, seed=seed)
    print(f"cascades of {args.gates} CNOT gates on {args.bits} bits, "
          f"{args.samples} samples")
    print(f"conjectured range: {report.lower_bound} <= M <= {report.upper_bound}")
    for m in sorted(report.histogram):
        print(f"  M={m}: {report.histogram[m]}")
    if report.violations:
        # Warnings, not failures: cancelling cascades legitimately land
        # below the gate count.
        print(f"{len(report.violations)} cascade(s) outside the conjectured range:")
        for v in report.violations[:10]:
            gates = "; ".join(v.circuit_text.splitlines())
            print(f"  [{v.bound} bound] M={v.m}: {gates}")
        if len(report.violations) > 10:
            print(f"  ... and {len(report.violations) - 10} more")
    else:
        print("no cascades outside the conjectured range")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rtwlogic",
        description="Simulate and compile instantaneous logic on clocked "
        "random telegraph waves.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compile", help="compile a circuit file to an insertion program")
    p.add_argument("--circuit", required=True, help="path to a NOT/CNOT circuit file")
    p.add_argument("--n", type=_positive, default=None, help="bit width override")
    p.add_argument("--out", default=None, help="write JSON here instead of stdout")
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("simulate", help="emit a per-tick signal trace")
    p.add_argument("--n", type=_positive, required=True, help="number of bits")
    p.add_argument("--ticks", type=_positive, required=True, help="trace length")
    p.add_argument("--superposition", required=True,
                   help="'universe', a {0,1,*} pattern, or 'COEFF*BITS;...' terms")
    p.add_argument("--circuit", default=None,
                   help="optional circuit file, compiled and applied before sampling")
    p.add_argument("--out", required=True, help="output path")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_seed_options(p)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="run equivalence checks")
    p.add_argument("--suite", choices=("figures", "random"), default="figures")
    p.add_argument("--trials", type=_positive, default=20,
                   help="random-suite trial count")
    p.add_argument("--ticks", type=_positive, default=1024)
    _add_seed_options(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="orthogonality statistics of the reference waves")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--ticks", type=_positive, required=True)
    _add_seed_options(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("conjecture", help="scan random cascades for hardware counts")
    p.add_argument("--gates", type=_positive, required=True)
    p.add_argument("--bits", type=_positive, required=True)
    p.add_argument("--samples", type=_positive, required=True)
    _add_seed_options(p)
    p.set_defaults(func=cmd_conjecture)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CircuitParseError as exc:
        print(f"circuit error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
