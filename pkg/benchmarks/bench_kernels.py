#!/usr/bin/env python3
"""Benchmark the scan kernels: numba JIT vs the pure-Python fallback.

The same kernel source runs in both modes; ROTSYS_NO_NUMBA=1 selects the
fallback.  By default this script re-launches itself in a subprocess per
backend (the flag is read at import time) and prints a comparison table.

    python benchmarks/bench_kernels.py            # compare both backends
    python benchmarks/bench_kernels.py --inner    # time the current backend
"""

import argparse
import json
import os
import subprocess
import sys
import time

WORKLOADS = [
    ("Q3 cube (256 systems)", "cube_graph", 20),
    ("prism (64 systems)", "prism_graph", 50),
    ("octahedron (46656 systems)", "octahedron_graph", 1),
]


def time_backend() -> dict:
    import rotsys as rs
    from rotsys._accel import NUMBA_ENABLED
    from rotsys._kernels import FlatScanner

    results = {"numba": NUMBA_ENABLED, "timings": {}}
    for label, factory, repeats in WORKLOADS:
        graph = getattr(rs, factory)()
        scanner = FlatScanner(graph)
        for _, *_ in scanner.scan(0, min(scanner.total, 8)):
            pass  # warm up (JIT compile happens here when enabled)
        best = float("inf")
        for _ in range(repeats):
            started = time.perf_counter()
            for _ in FlatScanner(graph).scan(0, scanner.total):
                pass
            best = min(best, time.perf_counter() - started)
        results["timings"][label] = {
            "seconds": best,
            "systems_per_second": scanner.total / best,
        }
    return results


def compare() -> None:
    runs = {}
    for mode, flag in (("numba", "0"), ("fallback", "1")):
        env = dict(os.environ, ROTSYS_NO_NUMBA=flag)
        proc = subprocess.run(
            [sys.executable, __file__, "--inner"],
            capture_output=True,
            text=True,
            env=env,
        )
        if proc.returncode != 0:
            sys.stderr.write(proc.stderr)
            raise SystemExit(1)
        runs[mode] = json.loads(proc.stdout)
    print(f"{'workload':<30} {'numba':>12} {'fallback':>12} {'speedup':>9}")
    for label, *_ in WORKLOADS:
        jit = runs["numba"]["timings"][label]["seconds"]
        py = runs["fallback"]["timings"][label]["seconds"]
        print(f"{label:<30} {jit:>11.4f}s {py:>11.4f}s {py / jit:>8.1f}x")
    if not runs["numba"]["numba"]:
        print("note: numba unavailable; both columns ran the fallback")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--inner", action="store_true", help="time the current backend only")
    args = parser.parse_args()
    if args.inner:
        print(json.dumps(time_backend()))
    else:
        compare()


if __name__ == "__main__":
    main()
