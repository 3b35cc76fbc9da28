#!/usr/bin/env python3
"""Benchmark the compiled reconstruction kernel against the numpy fallback.

Usage: python benchmarks/kernel_bench.py [--repeats N]

Times the batched interface sweep on three representative workloads (a
single long 1D row, a 1D Euler triple, and a 2D-sized row block) for each
scheme, and cross-checks that both backends agree.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from weno7.kernels import SchemeConfig, backend_name, interface_fluxes


def _workloads():
    rng = np.random.default_rng(42)
    long_row = np.sin(np.linspace(0, 40, 3208))[None, :] + 0.1 * rng.normal(size=(1, 3208))
    euler_rows = rng.normal(size=(3, 408)) + 2.0
    block_2d = rng.normal(size=(800, 208)) + 1.5
    return [("1x3200 (shock-entropy row)", long_row),
            ("3x400 (1D Euler state)", euler_rows),
            ("800x200 (2D sweep block)", block_2d)]


def _time(fn, repeats):
    best = np.inf
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=7)
    args = parser.parse_args()

    if backend_name() != "compiled":
        print("compiled backend not available; nothing to compare")
        return 1

    print(f"{'workload':>28} {'scheme':>6} {'compiled':>12} {'python':>12} "
          f"{'speedup':>8} {'max diff':>10}")
    for label, fp in _workloads():
        fm = fp[:, ::-1].copy()
        interfaces = fp.shape[0] * (fp.shape[1] - 7)
        for scheme in ("ns7", "bs7", "z7"):
            cfg = SchemeConfig(scheme=scheme, xi1=0.1, xi2=1.0)
            t_c = _time(lambda: interface_fluxes(fp, fm, cfg, backend="compiled"),
                        args.repeats)
            t_p = _time(lambda: interface_fluxes(fp, fm, cfg, backend="python"),
                        args.repeats)
            out_c = interface_fluxes(fp, fm, cfg, backend="compiled")
            out_p = interface_fluxes(fp, fm, cfg, backend="python")
            diff = float(np.max(np.abs(out_c - out_p)))
            rate_c = interfaces / t_c / 1e6
            rate_p = interfaces / t_p / 1e6
            print(f"{label:>28} {scheme:>6} "
                  f"{rate_c:>8.2f} Mi/s {rate_p:>8.2f} Mi/s "
                  f"{t_p / t_c:>7.1f}x {diff:>10.2e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
