"""Command-line entry point: factoring runs, truncation sweeps, Gram reports,
circuit execution against both backends, and the oracle verification suite.

Exit codes: 0 success, 1 verification failure, 2 usage error.  Every output
is a deterministic function of the flags and seed.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import _kernels
from .errors import HarmoniqError
from .gates import parse_circuit, run_circuit
from .measure import histogram
from .oracle import DenseState, assert_equivalent, dense_run_circuit, run_differential_suite
from .serialize import (
    write_outcome_csv,
    write_report_json,
    write_truncation_csv,
)
from .shor import run_shor
from .spectral import build_custom_ladder, fourier_spectrum, index_to_bitstring
from .truncation import delta_curve, ratio_curve
from .waveform import CoefficientVector, gram_matrix, synthesize


def _parse_ne_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in text.split(",") if x]


def _cmd_shor(args) -> int:
    report = run_shor(
        args.n, args.a, seed=args.seed, mode=args.mode, oversample=args.oversample
    )
    payload = report.to_dict()
    print(json.dumps(payload, indent=2))
    if args.out:
        write_report_json(payload, args.out)
    if args.hist:
        write_outcome_csv(report.histogram, args.hist)
    return 0


def _cmd_trunc(args) -> int:
    nes = _parse_ne_range(args.ne)
    if any(ne > 8 for ne in nes) and not args.big:
        print("ne above 8 requires --big", file=sys.stderr)
        return 2
    if any(ne < 2 or ne > 10 for ne in nes):
        print("ne must lie in 2..10", file=sys.stderr)
        return 2
    deltas, ratios = [], []
    for ne in nes:
        d = delta_curve(ne, args.qubit, oversample=args.oversample)
        r = ratio_curve(ne, args.qubit, oversample=args.oversample)
        deltas.append(d)
        ratios.append(r)
        print(
            f"ne={ne}: delta(full)={d.values[-1]:.3e} ratio(full)={r.values[-1]:.9f}"
        )
    delta_path, ratio_path = args.out
    write_truncation_csv(deltas, delta_path)
    write_truncation_csv(ratios, ratio_path)
    print(f"wrote {delta_path} and {ratio_path}")
    return 0


def _cmd_gram(args) -> int:
    freqs = [int(x) for x in args.freqs.split(",") if x]
    ladder, grid = build_custom_ladder(freqs, args.oversample)
    spectrum = fourier_spectrum(ladder)
    print(f"freqs={list(ladder.freqs)} fund={ladder.fund} omega_max={ladder.omega_max}")
    print(f"unique_spectrum={ladder.unique_spectrum}")
    dups = {om: k for om, k in spectrum.multiplicities.items() if k > 1 or om == 0}
    if dups:
        print(f"redundancies (|Omega|: count): {dups}")
    g = gram_matrix(ladder, grid, args.interval)
    n = ladder.n_qubits
    expected_diag = (0.5**n) * (grid.period if args.interval == "full" else grid.period / 2)
    off = g - np.diag(np.diag(g))
    print(f"expected orthogonal diagonal: {expected_diag!r}")
    print(f"max |off-diagonal|: {float(np.abs(off).max())!r}")
    pairs = np.argwhere(np.abs(off) > 1e-10)
    for j, k in pairs:
        if j < k:
            print(
                f"non-orthogonal pair ({index_to_bitstring(j, n)}, "
                f"{index_to_bitstring(k, n)}): value={float(g[j, k])!r} "
                f"(x fund/pi = {float(g[j, k] * ladder.fund / np.pi)!r})"
            )
    if args.out:
        with open(args.out, "w", newline="\n") as fh:
            fh.write(",".join(index_to_bitstring(j, n) for j in range(2**n)) + "\n")
            for row in g:
                fh.write(",".join(repr(float(x)) for x in row) + "\n")
        print(f"wrote {args.out}")
    return 0


def _cmd_circuit(args) -> int:
    with open(args.file) as fh:
        circuit = parse_circuit(fh.read())
    n = circuit.n_qubits
    if n > 10:
        print("circuit comparison supports at most 10 qubits", file=sys.stderr)
        return 2
    from .spectral import build_ladder

    _, grid = build_ladder(n, args.oversample)
    rng = np.random.default_rng(args.seed)
    if args.state == "random":
        amps = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
        amps /= np.linalg.norm(amps)
    else:
        amps = np.zeros(2**n, dtype=np.complex128)
        amps[0] = 1.0
    psi = synthesize(CoefficientVector(n, amps), grid)
    dense = DenseState(n, amps)
    psi, records = run_circuit(psi, circuit, rng_seed=args.seed, measure_mode=args.mode)
    dense, dense_records = dense_run_circuit(
        dense, circuit, rng_seed=args.seed, measure_mode=args.mode
    )
    report = assert_equivalent(psi, dense, args.tol)
    payload = {
        "file": args.file,
        "n_qubits": n,
        "ops": len(circuit.ops),
        "state": args.state,
        "seed": args.seed,
        "measurements": [
            {"qubit": r.qubit, "outcome": r.outcome} for r in records
        ],
        "oracle_measurements": [
            {"qubit": q, "outcome": o} for q, o in dense_records
        ],
        "max_abs_diff": report["max_abs_diff"],
        "tol": report["tol"],
        "pass": report["pass"],
    }
    print(json.dumps(payload, indent=2))
    if args.out:
        write_report_json(payload, args.out)
    if args.final_histogram:
        remaining = psi.grid.ladder.n_qubits
        print(json.dumps(histogram(psi, range(1, remaining + 1)), indent=2))
    return 0 if report["pass"] else 1


def _cmd_verify(args) -> int:
    report = run_differential_suite(
        args.n, args.circuits, args.seed, depth=args.depth, tol=args.tol
    )
    report["kernel_backend"] = _kernels.backend_name()
    status = "PASS" if report["pass"] else "FAIL"
    print(
        f"[{status}] {report['n_circuits']} random circuits on {report['n_qubits']} "
        f"qubits: max |amp diff| = {report['max_abs_diff']:.3e} (tol {report['tol']:g})"
    )
    if args.out:
        write_report_json(report, args.out)
    return 0 if report["pass"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harmoniq",
        description="Quantum-computation simulator over harmonic-waveform registers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("shor", help="factor an integer by period finding")
    p.add_argument("--n", type=int, required=True, help="odd composite to factor")
    p.add_argument("--a", type=int, required=True, help="base coprime with n")
    p.add_argument("--mode", choices=["qft", "simplified"], default="qft")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oversample", type=int, default=2)
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--hist", help="write the first-register histogram CSV here")
    p.set_defaults(func=_cmd_shor)

    p = sub.add_parser("trunc", help="truncation error and probability-ratio sweeps")
    p.add_argument("--ne", default="5..8", help="entangled-qubit counts, e.g. 5..8 or 5,7")
    p.add_argument("--qubit", type=int, default=1)
    p.add_argument("--oversample", type=int, default=2)
    p.add_argument("--big", action="store_true", help="allow ne = 9 and 10")
    p.add_argument(
        "--out",
        nargs=2,
        metavar=("DELTA_CSV", "RATIO_CSV"),
        default=["delta.csv", "ratio.csv"],
    )
    p.set_defaults(func=_cmd_trunc)

    p = sub.add_parser("gram", help="Gram matrix and redundancy report for a ladder")
    p.add_argument("--freqs", required=True, help="comma-separated integer frequencies")
    p.add_argument("--interval", choices=["full", "half"], default="full")
    p.add_argument("--oversample", type=int, default=2)
    p.add_argument("--out", help="write the matrix as CSV here")
    p.set_defaults(func=_cmd_gram)

    p = sub.add_parser("circuit", help="run a circuit file on both backends")
    p.add_argument("--file", required=True)
    p.add_argument("--state", choices=["zero", "random"], default="zero")
    p.add_argument("--mode", choices=["max_rule", "born"], default="max_rule")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--oversample", type=int, default=2)
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--final-histogram", action="store_true")
    p.set_defaults(func=_cmd_circuit)

    p = sub.add_parser("verify", help="differential suite against the dense oracle")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--circuits", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--depth", type=int, default=20)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--out", help="write the JSON report here")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except HarmoniqError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
