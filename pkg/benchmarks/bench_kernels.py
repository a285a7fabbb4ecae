"""Compare the numba kernels against the pure-Python fallback.

Each backend runs in its own interpreter because ``ISOLAB_DISABLE_JIT`` is read
at import time. JIT timings exclude compilation (one warm-up call first).

    python benchmarks/bench_kernels.py [--repeat 3] [--json out.json]
"""

import argparse
import json
import os
import subprocess
import sys

WORKER = r"""
import json, sys, time
from isolab import backend
from isolab._enum import G_SC, run_scan
from isolab.generators import square_lattice, triangulation_deg_k
from isolab.hyperbolicity import detour_growth, metric, thinness
from isolab.planar_map import PlanarMap
from isolab.subgraphs import host_arrays

repeat = int(sys.argv[1])
d7 = triangulation_deg_k(7, 3)
d7r2 = triangulation_deg_k(7, 2)
sq = square_lattice(41)
arr = host_arrays(d7)

cases = {
    "scan deg7 r3 cap 7": lambda: run_scan(arr, 7, checks=[({"dv": 2, "nv": -1, "one": 1}, G_SC, 2)]),
    "face tracing 41x41": lambda: PlanarMap(sq.origin, sq.twin, sq.rot_next, sq.outer_face_dart, n_vertices=sq.n_vertices),
    "all-pairs BFS deg7 r3": lambda: metric(d7),
    "thinness deg7 r2": lambda: thinness(d7r2),
    "detour 41x41 t=2..8": lambda: detour_growth(sq, 20 * 41 + 20, range(2, 9)),
}
out = {"backend": backend(), "times": {}}
for name, fn in cases.items():
    fn()
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    out["times"][name] = best
print(json.dumps(out))
"""


def run(disable: bool, repeat: int) -> dict:
    env = dict(os.environ, ISOLAB_DISABLE_JIT="1" if disable else "0")
    r = subprocess.run([sys.executable, "-c", WORKER, str(repeat)], env=env, capture_output=True, text=True)
    if r.returncode:
        sys.exit(r.stderr)
    return json.loads(r.stdout.strip().splitlines()[-1])


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json")
    a = ap.parse_args()
    jit = run(False, a.repeat)
    py = run(True, a.repeat)
    rows = []
    print(f"{'kernel':28s} {'numba s':>10s} {'python s':>10s} {'speedup':>8s}")
    for name, tj in jit["times"].items():
        tp = py["times"][name]
        rows.append({"kernel": name, "numba": tj, "python": tp, "speedup": tp / tj if tj else None})
        print(f"{name:28s} {tj:10.4f} {tp:10.4f} {tp / tj:8.1f}x")
    if a.json:
        with open(a.json, "w") as fh:
            json.dump({"backends": [jit["backend"], py["backend"]], "rows": rows}, fh, indent=2)


if __name__ == "__main__":
    main()
