#!/usr/bin/env python3
"""Benchmark the GMP-compiled rational backend against the pure-Python fallback.

Runs identical certified workloads in two subprocesses, one per backend
(selected at import via POLYACERT_BACKEND), times them, and checks that the
outputs are bit-identical.  Usage: python benchmarks/bench_backends.py
"""
from __future__ import annotations

import json
import os
import subprocess
import sys

PAYLOAD = r"""
import hashlib, json, time

import polyacert
from polyacert import BoundKind, rational

results = {"backend": polyacert.RATIONAL_BACKEND, "times": {}, "digests": {}}


def timed(name, fn):
    t0 = time.perf_counter()
    out = fn()
    results["times"][name] = time.perf_counter() - t0
    results["digests"][name] = hashlib.sha256(repr(out).encode()).hexdigest()


timed(
    "certify [3,14]",
    lambda: json.dumps(polyacert.certify(3, 14, rational(1, 1000)).to_json_dict(), sort_keys=True),
)
timed(
    "exact count, lam=399/4",
    lambda: polyacert.count_weighted(2, BoundKind.DIRICHLET, rational(399, 4)).value,
)
timed(
    "lower counts, lam=k/4, k=200..240",
    lambda: [
        polyacert.count_neumann2_certified_lower(rational(k, 4)).value for k in range(200, 241)
    ],
)
timed(
    "pi bracket, eps=1e-9",
    lambda: polyacert.format_rational(polyacert.pi_bounds(rational(1, 10**9)).lo),
)
print(json.dumps(results))
"""


def run_backend(backend: str) -> dict:
    env = dict(os.environ, POLYACERT_BACKEND=backend)
    proc = subprocess.run(
        [sys.executable, "-c", PAYLOAD], env=env, capture_output=True, text=True, check=True
    )
    return json.loads(proc.stdout.strip().splitlines()[-1])


def main() -> int:
    fast = run_backend("gmpy2")
    pure = run_backend("fractions")
    mismatches = [
        name for name in fast["digests"] if fast["digests"][name] != pure["digests"][name]
    ]
    width = max(len(name) for name in fast["times"])
    print(f"{'workload':<{width}}  {'gmpy2':>10}  {'fractions':>10}  {'speedup':>8}")
    for name, fast_t in fast["times"].items():
        pure_t = pure["times"][name]
        print(f"{name:<{width}}  {fast_t:>9.4f}s  {pure_t:>9.4f}s  {pure_t / fast_t:>7.1f}x")
    if mismatches:
        print(f"OUTPUT MISMATCH between backends: {mismatches}", file=sys.stderr)
        return 1
    print("outputs bit-identical across backends")
    return 0


if __name__ == "__main__":
    sys.exit(main())
