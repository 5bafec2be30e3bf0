"""Benchmark the compiled kernels against the pure-Python fallback.

Runs the same crystal workloads twice in fresh subprocesses, once with the
default numba-compiled kernels and once with KLRCRYSTALS_NO_JIT=1, and
reports wall-clock times plus the speedup.  Both backends must produce
identical results; the workload asserts a checksum to prove it.

Usage:  python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

WORKLOADS = [
    ("B3 weight (1,1,3): build crystal, extract + round-trip all strings",
     "B", 3, (1, 1, 3)),
    ("C3 weight (1,1,1): build crystal, extract + round-trip all strings",
     "C", 3, (1, 1, 1)),
    ("D4 weight (1,0,1,1): build crystal, extract + round-trip all strings",
     "D", 4, (1, 0, 1, 1)),
]


def run_workloads() -> dict:
    from klrcrystals import (
        adapted_string,
        build_cartan,
        generate_crystal,
        longest_word,
        string_to_element,
    )
    from klrcrystals._kernels import JIT_ENABLED

    out = {"jit": JIT_ENABLED, "times": [], "checksums": []}
    for _, tag, rank, lam in WORKLOADS:
        datum = build_cartan(tag, rank)
        word = longest_word(tag, rank)
        start = time.perf_counter()
        graph = generate_crystal(datum, lam)
        checksum = 0
        for el in graph.elements:
            entries = adapted_string(el, word).entries
            assert string_to_element(datum, lam, entries) == el
            checksum += sum(entries)
        out["times"].append(time.perf_counter() - start)
        out["checksums"].append((len(graph), checksum))
    return out


def run_backend(no_jit: bool, repeat: int) -> dict:
    env = dict(os.environ)
    if no_jit:
        env["KLRCRYSTALS_NO_JIT"] = "1"
    else:
        env.pop("KLRCRYSTALS_NO_JIT", None)
    best = None
    for _ in range(repeat):
        proc = subprocess.run(
            [sys.executable, os.path.abspath(__file__), "--inner"],
            env=env, capture_output=True, text=True, check=True)
        result = json.loads(proc.stdout)
        if best is None or sum(result["times"]) < sum(best["times"]):
            best = result
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--inner", action="store_true",
                        help=argparse.SUPPRESS)
    parser.add_argument("--repeat", type=int, default=2,
                        help="runs per backend; best time is kept "
                             "(default 2, absorbs JIT warm-up)")
    args = parser.parse_args()
    if args.inner:
        json.dump(run_workloads(), sys.stdout)
        return 0

    jit = run_backend(no_jit=False, repeat=args.repeat)
    pure = run_backend(no_jit=True, repeat=args.repeat)
    if jit["checksums"] != pure["checksums"]:
        print("BACKEND MISMATCH:", jit["checksums"], pure["checksums"])
        return 1
    if not jit["jit"]:
        print("warning: numba unavailable; both runs used the fallback")

    width = max(len(w[0]) for w in WORKLOADS)
    print(f"{'workload':<{width}}  {'jit':>8}  {'pure':>8}  speedup")
    for (name, *_), tj, tp in zip(WORKLOADS, jit["times"], pure["times"]):
        print(f"{name:<{width}}  {tj:8.3f}s {tp:8.3f}s  {tp / tj:6.1f}x")
    total_j, total_p = sum(jit["times"]), sum(pure["times"])
    print(f"{'total':<{width}}  {total_j:8.3f}s {total_p:8.3f}s  "
          f"{total_p / total_j:6.1f}x")
    print("results identical across backends (checksums match)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
