"""The pure-Python kernels must agree with the compiled ones."""

import json
import os
import subprocess
import sys

PROBE = r"""
import json
from isolab import backend
from isolab._enum import G_SC, run_scan
from isolab.generators import cycle_graph, square_lattice, triangulation_deg_k
from isolab.hyperbolicity import detour_growth, metric, thinness
from isolab.isoperimetry import estimate_many
from isolab.subgraphs import enumerate_connected_subgraphs, host_arrays

h = triangulation_deg_k(7, 2)
sq = square_lattice(5)
est = estimate_many(sq, ["j", "kappa", "iota"], 6)
scan = run_scan(host_arrays(h), 5, checks=[({"dv": 2, "nv": -1, "one": 1}, G_SC, 2)])
print(json.dumps({
    "backend": backend(),
    "count": sum(1 for _ in enumerate_connected_subgraphs(h, 4)),
    "est": {k: [str(v.value), list(v.witness.sorted_vertices)] for k, v in est.items()},
    "nodes": int(scan.nodes),
    "violations": [int(x) for x in scan.violations],
    "dist": int(metric(h).distances.sum()),
    "delta": thinness(cycle_graph(9)).delta,
    "detour": [p.shortest_detour_length for p in detour_growth(square_lattice(11), 60, [2, 3])],
}))
"""


def _probe(disable: bool) -> dict:
    env = dict(os.environ)
    env["ISOLAB_DISABLE_JIT"] = "1" if disable else "0"
    env["ISOLAB_THREADS"] = "1"
    r = subprocess.run([sys.executable, "-c", PROBE], capture_output=True, text=True, env=env, timeout=600)
    assert r.returncode == 0, r.stderr
    return json.loads(r.stdout.strip().splitlines()[-1])


def test_python_fallback_matches_jit():
    fast = _probe(False)
    slow = _probe(True)
    assert fast.pop("backend") == "numba"
    assert slow.pop("backend") == "python"
    assert fast == slow
