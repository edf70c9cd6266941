"""Benchmark the enumeration kernels against each other.

Runs the same census once per available backend and reports wall time and
node throughput.  The pure-Python kernel is the reference; the compiled
kernel should agree exactly and run two to three orders of magnitude
faster.
"""
from __future__ import annotations

import time

from . import _kernel
from .explorer import census, resolve_threads


def run_benchmark(g_max: int = 22, threads: int | None = None) -> list[dict]:
    threads = resolve_threads(threads)
    results = []
    reference = None
    for name in ("cy", "py"):
        try:
            kern = _kernel.get_kernel(name)
        except ImportError:
            continue
        t0 = time.perf_counter()
        counts = census(g_max, threads=threads, kernel=kern)
        dt = time.perf_counter() - t0
        nodes = sum(counts)
        if reference is None:
            reference = counts
        elif counts != reference:
            raise AssertionError(f"backend {name} census disagrees")
        results.append({
            "backend": name,
            "g_max": g_max,
            "threads": threads,
            "nodes": nodes,
            "seconds": dt,
            "nodes_per_sec": nodes / dt if dt > 0 else float("inf"),
        })
    if len(results) == 2:
        results[0]["speedup_vs_py"] = results[1]["seconds"] / results[0]["seconds"]
    return results
