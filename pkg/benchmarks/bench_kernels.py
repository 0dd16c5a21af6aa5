#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-numpy fallback.

Usage: python benchmarks/bench_kernels.py [--repeat N]

Covers the three hot paths: fixed-step RK4 time stepping (a sequential
recurrence the numpy backend cannot vectorize), Monte Carlo accumulation,
and the tensor-product quadrature bilinear form.
"""

import argparse
import math
import time

import numpy as np

from viscoexchange import _kernels_py

try:
    from viscoexchange import _kernels as compiled
except ImportError:
    compiled = None


def timeit(fn, repeat):
    best = math.inf
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def benchmarks():
    n_steps = 1_000_000
    dt = 1e-4
    rate = np.sin(np.linspace(0.0, 20.0, n_steps + 1)) * 0.1
    gen = np.random.Generator(np.random.Philox(key=np.array([0, 0], dtype=np.uint64)))
    u = gen.random((1_000_000, 2))
    x, w = np.polynomial.legendre.leggauss(400)
    x, w = 10.0 * x, 10.0 * w
    a = np.ascontiguousarray(w * np.exp(-(x**2)))
    b = np.ascontiguousarray(w * np.exp(-((x - 1.0) ** 2)))

    return [
        ("strain_driven RK4, 1e6 steps (sinusoid)",
         lambda k: k.strain_driven_series(2, 0.01, 3.0, 0.0, n_steps, dt, 2.0, 4.0)),
        ("stress_driven RK4, 1e6 steps (sinusoid)",
         lambda k: k.stress_driven_series(2, 1.0, 3.0, 0.0, n_steps, dt, 2.0, 4.0)),
        ("stress replay from strain rate, 1e6 steps",
         lambda k: k.stress_from_strain_rate(rate, dt, 0.0, 2.0, 4.0)),
        ("MC direct integrand, 1e6 samples",
         lambda k: k.mc_direct(u, -0.5, 0.7, 0.5, 0.7, 0, 1.0, 1.0)),
        ("MC exchange integrand, 1e6 samples",
         lambda k: k.mc_exchange(u, 0.0, 0.7, -0.5, 1.0, 0.5, 1.0, 0, 1.0, 1.0)),
        ("quadrature bilinear form, 400x400 nodes",
         lambda k: k.quad_bilinear(x, a, b, 1, 1.0, 0.5)),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions")
    args = parser.parse_args()

    if compiled is None:
        print("compiled extension not available; timing the python backend only\n")

    width = max(len(name) for name, _ in benchmarks())
    header = f"{'kernel':<{width}}  {'python':>10}"
    if compiled is not None:
        header += f"  {'cython':>10}  {'speedup':>8}"
    print(header)
    print("-" * len(header))

    for name, call in benchmarks():
        t_py = timeit(lambda: call(_kernels_py), args.repeat)
        line = f"{name:<{width}}  {t_py * 1e3:>8.2f}ms"
        if compiled is not None:
            t_cy = timeit(lambda: call(compiled), args.repeat)
            line += f"  {t_cy * 1e3:>8.2f}ms  {t_py / t_cy:>7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
