#!/usr/bin/env python3
"""Benchmark the addressing kernels: numba direct loop, numpy masked-FFT
fallback, and the full-period fast path.

Usage: python benchmarks/bench_addressing.py [--qubits 9] [--repeats 20]

The direct double loop is the hot kernel behind exact and truncated
addressing; the fast path correlates over the full period.  The fallback
evaluates the same windowed sum without numba.  Set HARMONIQ_NUMBA=0 to run
the whole package on the fallback.
"""

import argparse
import time

import numpy as np

import harmoniq as hq
from harmoniq import _kernels


def timeit(fn, repeats):
    fn()  # warm-up (JIT compile, FFT plan)
    t0 = time.perf_counter()
    for _ in range(repeats):
        fn()
    return (time.perf_counter() - t0) / repeats


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--qubits", type=int, default=9)
    parser.add_argument("--repeats", type=int, default=20)
    parser.add_argument("--oversample", type=int, default=2)
    args = parser.parse_args()

    _, grid = hq.build_ladder(args.qubits, args.oversample)
    rng = np.random.default_rng(0)
    dim = 2**args.qubits
    amps = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    amps /= np.linalg.norm(amps)
    psi = hq.synthesize(hq.CoefficientVector(args.qubits, amps), grid)
    kern = hq.generator_kernel(grid, 1).samples
    q = np.cos(grid.times) * psi.samples
    half = grid.m // 2

    print(f"qubits={args.qubits} m={grid.m} backend={_kernels.backend_name()}")
    rows = []
    if _kernels.backend_name() == "numba":
        t = timeit(lambda: _kernels.windowed_correlation(q, kern, half), args.repeats)
        rows.append(("direct windowed loop (numba)", t))
    t = timeit(lambda: _kernels.masked_fft_correlation(q, kern, half), args.repeats)
    rows.append(("windowed masked FFT (numpy)", t))
    t = timeit(lambda: _kernels.full_correlation(q, kern), args.repeats)
    rows.append(("full-period FFT correlation", t))
    t_direct = timeit(lambda: hq.address_direct(psi, 1), args.repeats)
    rows.append(("address_direct", t_direct))
    t_fast = timeit(lambda: hq.address_fast(psi, 1), args.repeats)
    rows.append(("address_fast", t_fast))

    width = max(len(name) for name, _ in rows)
    for name, t in rows:
        print(f"  {name:<{width}}  {t * 1e3:9.3f} ms")
    print(f"  fast-path speedup over direct: {t_direct / t_fast:.1f}x")

    # agreement between the two windowed implementations
    a = _kernels.windowed_correlation(q, kern, half)
    b = _kernels.masked_fft_correlation(q, kern, half)
    print(f"  windowed implementations max |diff|: {np.abs(a - b).max():.2e}")


if __name__ == "__main__":
    main()
