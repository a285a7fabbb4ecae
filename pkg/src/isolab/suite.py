"""Acceptance suite: fourteen numbered checks against freshly generated hosts.

Each check returns a :class:`CriterionResult`. Thresholds and caps are module
constants so the CLI, the tests and the README quote the same numbers.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ._enum import G_POLY, G_SC, run_scan
from .curvature import HIGUCHI_GAP, fmt, vertex_curvatures
from .decomposition import contract, partition
from .generators import (
    g1_multiedge,
    g2_multiedge_lattice,
    lambda_attachment,
    nonnormal_chain,
    square_lattice,
    triangulation_deg_k,
)
from .hyperbolicity import detour_growth, growth_bound_check, layered_host, thinness
from .isoperimetry import estimate, jtilde_identity_check, ratio
from .planar_map import classify, dual
from .subgraphs import SubgraphView, host_arrays

__all__ = ["CriterionResult", "CRITERIA", "run_suite", "format_table"]

CAP = 12
IDENTITY_CAP = 10
G2_CAP = 10
CHAIN_DIRECT_CAP = 6
LAMBDA_CAP = 6
TREND_CAP = 10
PARTITION_SAMPLES = 240
J_THRESHOLD = Fraction(1, 20)
DELTA_BOUND = 4
G2_THIN_ELLS = 1
DETOUR_RADIUS = 16


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    seconds: float = 0.0
    detail: dict = field(default_factory=dict)

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number:2d}. {self.title} ({self.seconds:.1f} s)"

    def as_dict(self) -> dict:
        return {"number": self.number, "title": self.title, "passed": self.passed, "seconds": round(self.seconds, 3), "detail": self.detail}


def _fr(x):
    return None if x is None else fmt(Fraction(x))


def _label_map(host) -> dict:
    return {lab: v for v, lab in host.labels.items()}


# --------------------------------------------------------------------------------
# 1-4: the chain, Lambda and G1 witnesses
# --------------------------------------------------------------------------------


def _chain_parts(host):
    lo, hi = host.family["params"]["n_range"]
    lab = _label_map(host)
    o = {n: lab[f"o_{n}"] for n in range(lo, hi + 2)}
    v = {n: [vv for k, vv in sorted((int(s.split("^")[0][2:]), x) for s, x in lab.items() if s.startswith("v_") and s.endswith(f"^{n}"))] for n in range(lo, hi + 1)}
    return lo, hi, o, v


def c1_exact_curvature() -> CriterionResult:
    h = nonnormal_chain(n_range=(-3, 3))
    psi = vertex_curvatures(h)
    lo, hi, o, v = _chain_parts(h)
    vs = [x for n in v for x in v[n]]
    ok_v = all(psi[x] == Fraction(5, 12) for x in vs)
    bad_o = [n for n in range(lo, hi + 1) if not psi[o[n]] <= -Fraction(7 * abs(n) + 4, 3)]
    return CriterionResult(1, "exact curvature on the non-normal chain", ok_v and not bad_o and len(vs) == 24, detail={
        "v_count": len(vs), "v_values": sorted({_fr(psi[x]) for x in vs}), "o_values": {n: _fr(psi[o[n]]) for n in range(lo, hi + 1)},
        "o_failures": bad_o,
    })


def c2_grouped_negativity() -> CriterionResult:
    h = nonnormal_chain(n_range=(-3, 3))
    psi = vertex_curvatures(h)
    lo, hi, o, v = _chain_parts(h)
    rows = {}
    ok = True
    for n in range(lo, hi + 1):
        total = psi[o[n]] + sum((psi[x] for x in v.get(n, [])), Fraction(0)) + sum((psi[x] for x in v.get(n - 1, [])), Fraction(0))
        bound = -Fraction(4 * abs(n) + 3, 6)
        rows[n] = {"sum": _fr(total), "bound": _fr(bound), "ok": total <= bound}
        ok &= total <= bound
    return CriterionResult(2, "grouped negativity around each o_n", ok, detail=rows)


def c3_upper_average_witness() -> CriterionResult:
    """Certificate for every connected interior T with 3 <= |T| <= CAP.

    With w = psi + 1/6 and P = {w > 0}, restrict T to R = P and its interior
    neighbours. Vertices outside R have w <= 0, and a component C of T within R
    that holds a P vertex has a second vertex of T adjacent to it, so either
    |C| >= 3 (checked by enumeration on R) or C is an adjacent pair (P, non-P)
    (checked pairwise). A direct scan of the whole interior at a smaller cap
    corroborates the certificate.
    """
    h = nonnormal_chain(n_range=(-3, 3))
    psi = vertex_curvatures(h)
    w = {x: p + Fraction(1, 6) for x, p in psi.items()}
    P = {x for x, val in w.items() if val > 0}
    ptr, nbr = h.csr()
    R = set(P)
    for p in P:
        R.update(int(u) for u in nbr[ptr[p] : ptr[p + 1]] if h.interior[u])
    scale = math.lcm(*(val.denominator for val in w.values()))
    weights = np.zeros(h.n_vertices, np.int64)
    for x, val in w.items():
        weights[x] = int(val * scale)
    mask = np.zeros(h.n_vertices, bool)
    mask[list(R)] = True
    arr = host_arrays(h, allowed=mask, weights=weights)
    res = run_scan(arr, CAP, checks=[({"w": -1}, 0, 3)])
    pair_bad = [
        (p, int(x)) for p in P for x in nbr[ptr[p] : ptr[p + 1]] if h.interior[x] and int(x) not in P and w[p] + w[int(x)] > 0
    ]
    outside_bad = [x for x, val in w.items() if x not in P and val > 0]
    full = host_arrays(h, weights=weights)
    direct = run_scan(full, CHAIN_DIRECT_CAP, checks=[({"w": -1}, 0, 3)])
    ok = res.violations[0] == 0 and not pair_bad and not outside_bad and direct.violations[0] == 0
    return CriterionResult(3, "sum of psi over T is at most -|T|/6", ok, detail={
        "P_size": len(P), "R_size": len(R), "enumerated_in_R": res.nodes, "violations_in_R": res.violations[0],
        "pair_failures": pair_bad[:5], "direct_cap": CHAIN_DIRECT_CAP, "direct_nodes": direct.nodes,
        "direct_violations": direct.violations[0], "cap": CAP,
    })


def c4_counterexample_ratios() -> CriterionResult:
    out = {}
    ok = True
    lam = lambda_attachment()
    sched = lam.family["params"]["schedule"]
    for k in range(1, len(sched) + 1):
        r = ratio("j", SubgraphView(lam, lam.groups[f"S_{k}"]))
        want = Fraction(1, 4 * sched[k - 1] + 1)
        out[f"lambda S_{k}"] = {"got": _fr(r), "want": _fr(want)}
        ok &= r == want
    ch = nonnormal_chain(n_range=(-3, 3))
    lo, hi = ch.family["params"]["n_range"]
    for n in range(lo, hi + 1):
        r = ratio("kappa", SubgraphView(ch, ch.groups[f"S_{n}"]))
        want = Fraction(4, 3 * abs(n) + 1)
        out[f"chain S_{n}"] = {"got": _fr(r), "want": _fr(want)}
        ok &= r == want
    g1 = g1_multiedge()
    for n in g1.family["params"]["schedule"]:
        r = ratio("kappa", SubgraphView(g1, g1.groups[f"S_{n}"]))
        want = Fraction(4, 2 * n + 2)
        out[f"g1 S_{n}"] = {"got": _fr(r), "want": _fr(want)}
        ok &= r == want
    return CriterionResult(4, "counterexample ratios on labelled witnesses", ok, detail=out)


# --------------------------------------------------------------------------------
# 5-7: exhaustive inequalities
# --------------------------------------------------------------------------------


def _standard_hosts():
    return {
        "deg6_r3": triangulation_deg_k(6, 3),
        "deg7_r3": triangulation_deg_k(7, 3),
        "square7": square_lattice(7),
    }


def c5_euler() -> CriterionResult:
    out = {}
    ok = True
    for name, h in _standard_hosts().items():
        res = run_scan(host_arrays(h), CAP, checks=[
            ({"dv": 2, "nf": 3, "one": -3, "ne": -1}, G_SC, 2),
            ({"sumdegf": 1, "de": 1, "ne": -2}, G_POLY, 1),
            ({"sumdegf": -1, "de": -1, "ne": 2}, G_POLY, 1),
            ({"one": -1}, G_SC, 2),
            ({"one": -1}, G_POLY, 1),
        ])
        v = res.violations
        out[name] = {"nodes": res.nodes, "simply_connected": v[3], "polygons": v[4], "facebound_fail": v[0], "edgenumber_fail": v[1] + v[2]}
        ok &= v[0] == 0 and v[1] == 0 and v[2] == 0 and v[3] > 0 and v[4] > 0
    return CriterionResult(5, "face bound and edge-number identity", ok, detail=out)


def c6_face_degree_sum() -> CriterionResult:
    out = {}
    ok = True
    for name, h in _standard_hosts().items():
        res = run_scan(host_arrays(h), CAP, checks=[({"de": 3, "nf": 6, "sumdegf": -1}, G_POLY, 1), ({"one": -1}, G_POLY, 1)],
                       objectives=[({"de": 1}, {"nf": 1}, G_POLY, 1), ({"de": 1}, {"sumdegf": 1}, G_POLY, 1)])
        b1, b2 = res.best
        c1 = Fraction(b1[1], b1[0])
        c2 = Fraction(b2[1], b2[0])
        out[name] = {"polygons": res.violations[1], "violations": res.violations[0], "C1": _fr(c1), "C2": _fr(c2), "C2_le_6C1_plus_3": c2 <= 6 * c1 + 3}
        ok &= res.violations[0] == 0 and res.violations[1] > 0
    return CriterionResult(6, "sum of face degrees at most 3|d_e S| + 6|F(S)|", ok, detail=out)


def c7_boundary_lower_bounds() -> CriterionResult:
    out = {}
    ok = True
    for name, h in _standard_hosts().items():
        c = classify(h)
        checks = []
        if c.proper:
            checks.append(({"dv": 1, "one": -2}, 0, 2))
        if c.normal:
            checks.append(({"dv": 1, "one": -3}, 0, 3))
        res = run_scan(host_arrays(h), CAP, checks=checks)
        out[name] = {"proper": c.proper, "normal": c.normal, "nodes": res.nodes, "violations": res.violations}
        ok &= bool(checks) and all(x == 0 for x in res.violations)
    ch = nonnormal_chain(n_range=(-3, 3))
    c = classify(ch)
    res = run_scan(host_arrays(ch), CHAIN_DIRECT_CAP, checks=[({"dv": 1, "one": -2}, 0, 2)])
    out["chain"] = {"proper": c.proper, "normal": c.normal, "cap": CHAIN_DIRECT_CAP, "nodes": res.nodes, "violations": res.violations}
    ok &= c.proper and res.violations[0] == 0
    return CriterionResult(7, "vertex boundary lower bounds", ok, detail=out)


# --------------------------------------------------------------------------------
# 8-9
# --------------------------------------------------------------------------------


def c8_identity() -> CriterionResult:
    out = {}
    ok = True
    for name, h in {"deg7_r3": triangulation_deg_k(7, 3), "grid4_whole": square_lattice(4, whole=True)}.items():
        rep = jtilde_identity_check(h, IDENTITY_CAP)
        out[name] = rep.as_dict()
        ok &= rep.equal
    return CriterionResult(8, "min j equals min jt/(1+jt) at cap 10", ok, detail=out)


def c9_partition() -> CriterionResult:
    out = {}
    ok = True
    for name, h in {"deg7_r3": triangulation_deg_k(7, 3), "square9": square_lattice(9)}.items():
        res = run_scan(host_arrays(h), CAP, sample=(PARTITION_SAMPLES, G_SC, 2), seed=7)
        fails = {}
        for s in res.samples:
            S = SubgraphView(h, s)
            T = contract(S)
            P = partition(S, T)
            for key in ("induced_prefixes", "single_shared_vertex", "piece_count", "dv_growth", "union", "tree", "B_le_dv", "m_le_2dv"):
                if not P.conditions[key]:
                    fails.setdefault(key, []).append(s)
        out[name] = {"samples": len(res.samples), "failures": {k: len(v) for k, v in fails.items()}}
        ok &= len(res.samples) >= 200 and not fails
    return CriterionResult(9, "partition and contraction-tree certificates", ok, detail=out)


# --------------------------------------------------------------------------------
# 10-12
# --------------------------------------------------------------------------------


def _trend_estimates():
    rows = {"deg7": {}, "deg7_dual": {}, "lambda": {}, "lambda_dual": {}}
    for R in (2, 3, 4):
        h = triangulation_deg_k(7, R)
        rows["deg7"][R] = estimate(h, "j", TREND_CAP).value
        rows["deg7_dual"][R] = estimate(dual(h).map, "j", TREND_CAP).value
    for k in (1, 2, 3):
        h = lambda_attachment(count=k)
        ws = [h.groups[f"S_{i}"] for i in range(1, k + 1)]
        rows["lambda"][k] = estimate(h, "j", LAMBDA_CAP, extra_witnesses=ws).value
        rows["lambda_dual"][k] = estimate(dual(h).map, "j", TREND_CAP).value
    return rows


_TREND_CACHE: dict = {}


def _trend():
    if "rows" not in _TREND_CACHE:
        _TREND_CACHE["rows"] = _trend_estimates()
    return _TREND_CACHE["rows"]


def c10_trend() -> CriterionResult:
    rows = _trend()
    d7 = all(x >= J_THRESHOLD for x in rows["deg7"].values()) and all(x >= J_THRESHOLD for x in rows["deg7_dual"].values())
    lam = list(rows["lambda"][k] for k in sorted(rows["lambda"]))
    lam_ok = all(b < a for a, b in zip(lam, lam[1:])) and lam[-1] < J_THRESHOLD
    dual_ok = all(x >= J_THRESHOLD for x in rows["lambda_dual"].values())
    detail = {k: {str(r): _fr(v) for r, v in d.items()} for k, d in rows.items()}
    detail["threshold"] = _fr(J_THRESHOLD)
    return CriterionResult(10, "j-estimate trend: deg-7 and dual vs Lambda", d7 and lam_ok and dual_ok, detail=detail)


def c11_thinness() -> CriterionResult:
    d7 = {R: thinness(triangulation_deg_k(7, R), cap=1000).delta for R in range(2, 6)}
    sq = {n: thinness(square_lattice(n, whole=True), cap=1000).delta for n in range(4, 11)}
    g2 = {N: thinness(g2_multiedge_lattice(N, [G2_THIN_ELLS] * N), cap=1000).delta for N in range(4, 11)}

    def increasing(d):
        vals = [d[k] for k in sorted(d)]
        return all(b > a for a, b in zip(vals, vals[1:]))

    ok = all(x <= DELTA_BOUND for x in d7.values()) and increasing(sq) and increasing(g2)
    return CriterionResult(11, "thinness: bounded on deg-7, growing on lattices", ok, detail={
        "deg7": d7, "square": sq, "g2": g2, "delta_bound": DELTA_BOUND,
    })


def c12_growth_bound() -> CriterionResult:
    rows = _trend()
    j_lower = min(rows["deg7"].values())
    h = layered_host(7, DETOUR_RADIUS)
    ring1 = range(int(h.ring_starts[1]), int(h.ring_starts[2]))
    probes = []
    for z in [0, *ring1]:
        probes += detour_growth(h, z, [12])
    probes += detour_growth(h, 0, [16])
    rep = growth_bound_check(h, j_lower, probes)
    return CriterionResult(12, "detour lengths beat the growth bound for t in {12, 16}", rep.ok, detail={
        "j_lower": _fr(j_lower), "probes": [dict(p.as_dict(), **r) for p, r in zip(probes, rep.rows)],
    })


# --------------------------------------------------------------------------------
# 13-14
# --------------------------------------------------------------------------------


def c13_g2() -> CriterionResult:
    h = g2_multiedge_lattice(3)
    fam = h.family
    fd = np.delete(h.face_degree, h.outer_face)
    res = run_scan(host_arrays(h), G2_CAP, checks=[({"ds": 4, "nv": -1}, 0, 1)], prune_cap=G2_CAP)
    ok = bool(fam["rule_ok"]) and int(fd.max()) <= 4 and res.violations[0] == 0
    return CriterionResult(13, "G2 certification", ok, detail={
        "ells": fam["ells"], "C": fam["C"], "rule_ok": fam["rule_ok"], "max_face_degree": int(fd.max()),
        "nodes": res.nodes, "pruned_subtrees": res.pruned, "violations": res.violations[0], "cap": G2_CAP,
    })


def c14_higuchi() -> CriterionResult:
    hosts = {
        "deg6_r4": triangulation_deg_k(6, 4),
        "deg7_r4": triangulation_deg_k(7, 4),
        "deg8_r3": triangulation_deg_k(8, 3),
        "square9": square_lattice(9),
        "chain": nonnormal_chain(n_range=(-3, 3)),
        "lambda": lambda_attachment(),
        "g1": g1_multiedge(),
        "g2": g2_multiedge_lattice(3),
    }
    out = {}
    ok = True
    for name, h in hosts.items():
        psi = vertex_curvatures(h, allow_violation=True)
        neg = [x for x in psi.values() if x < 0]
        worst = max(neg) if neg else None
        good = all(x <= -HIGUCHI_GAP for x in neg)
        out[name] = {"negative": len(neg), "closest_to_zero": _fr(worst), "ok": good}
        ok &= good
    return CriterionResult(14, "negative curvature is at most -1/1806", ok, detail=out)


CRITERIA = {
    1: c1_exact_curvature,
    2: c2_grouped_negativity,
    3: c3_upper_average_witness,
    4: c4_counterexample_ratios,
    5: c5_euler,
    6: c6_face_degree_sum,
    7: c7_boundary_lower_bounds,
    8: c8_identity,
    9: c9_partition,
    10: c10_trend,
    11: c11_thinness,
    12: c12_growth_bound,
    13: c13_g2,
    14: c14_higuchi,
}


def run_criterion(number: int) -> CriterionResult:
    t = time.perf_counter()
    try:
        res = CRITERIA[number]()
    except Exception as exc:  # a crash is a failure, reported with its reason
        res = CriterionResult(number, CRITERIA[number].__name__, False, detail={"error": f"{type(exc).__name__}: {exc}"})
    res.seconds = time.perf_counter() - t
    return res


def run_suite(only=None, progress=None) -> list:
    out = []
    for n in sorted(only or CRITERIA):
        r = run_criterion(n)
        if progress:
            progress(r)
        out.append(r)
    return out


def format_table(results) -> str:
    lines = [r.line() for r in results]
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} criteria passed")
    return "\n".join(lines)
