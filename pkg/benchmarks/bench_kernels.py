#!/usr/bin/env python3
"""Compare the jit counting kernel against the interpreted twin.

Runs the same workloads in two subprocesses, one per backend (selected via
GREX_KERNEL), and prints a timing table.  Workloads exercise the paths the
kernel actually serves: Gram matrices and staircase K-exactness sweeps.

Usage: python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = {
    "gram_g48": (
        "from grex.diagrams import Box\n"
        "from grex.ktheory import kapranov_gram\n"
        "kapranov_gram(Box(4, 8))\n"
    ),
    "staircases_g311": (
        "from grex.diagrams import Box, enumerate_diagrams\n"
        "from grex.staircase import build_staircase, is_k_exact\n"
        "box = Box(3, 11)\n"
        "for lam in enumerate_diagrams(box, 'all'):\n"
        "    if lam.parts[0] == box.width:\n"
        "        assert is_k_exact(build_staircase(box, lam))\n"
    ),
    "staircases_g412": (
        "from grex.diagrams import Box, enumerate_diagrams\n"
        "from grex.staircase import build_staircase, is_k_exact\n"
        "box = Box(4, 12)\n"
        "for lam in enumerate_diagrams(box, 'all'):\n"
        "    if lam.parts[0] == box.width:\n"
        "        assert is_k_exact(build_staircase(box, lam))\n"
    ),
}


def run_backend(backend: str, body: str) -> float:
    env = dict(os.environ, GREX_KERNEL=backend)
    script = (
        "import time, json, sys\n"
        "import grex.kernels as kernels\n"
        f"assert kernels.backend() == {backend!r}, kernels.backend()\n"
        "t0 = time.time()\n"
        + body
        + "print(json.dumps({'seconds': time.time() - t0}))\n"
    )
    out = subprocess.run(
        [sys.executable, "-c", script], capture_output=True, text=True, env=env
    )
    if out.returncode != 0:
        sys.stderr.write(out.stderr)
        raise SystemExit(f"benchmark subprocess failed for backend {backend}")
    return json.loads(out.stdout.strip().splitlines()[-1])["seconds"]


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="skip the largest workload")
    args = parser.parse_args()
    names = list(WORKLOADS)
    if args.quick:
        names = names[:-1]
    print(f"{'workload':<18} {'numba':>9} {'python':>9} {'speedup':>8}")
    for name in names:
        body = WORKLOADS[name]
        try:
            t_jit = run_backend("numba", body)
        except SystemExit:
            print(f"{name:<18} {'n/a':>9}")
            continue
        t_py = run_backend("python", body)
        print(f"{name:<18} {t_jit:>8.2f}s {t_py:>8.2f}s {t_py / t_jit:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
