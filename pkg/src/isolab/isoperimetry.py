"""Isoperimetric ratios and exhaustive minimum searches.

Four ratios are supported, keyed ``iota``, ``j``, ``kappa`` and ``jtilde``:

    iota   = |dS| / Vol(S)
    j      = |d_v S| / |V(S)|
    kappa  = |d_e S| / |F(S)|
    jtilde = |outer vertex boundary| / |V(S)|

Searches scan every connected interior subgraph up to a vertex cap, replace
each by its hole-filled version and keep the minimum with the lexicographically
smallest witness on ties.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ._enum import G_FACES, G_POLY, run_scan
from .errors import AssumptionViolated, CapExceeded, EmptyFaceSet
from .planar_map import PlanarMap, classify, dual
from .subgraphs import DEFAULT_CAP, SubgraphView, boundaries, fill_holes, host_arrays

__all__ = [
    "ratio",
    "IsoperimetricEstimate",
    "estimate",
    "estimate_many",
    "jtilde_identity_check",
    "dual_transfer_check",
    "RATIO_TERMS",
]

KINDS = ("iota", "j", "kappa", "jtilde")

# (numerator terms, denominator terms, guard) over the scan measure vector
RATIO_TERMS = {
    "iota": ({"ds": 1}, {"vol": 1}, 0),
    "j": ({"dv": 1}, {"nv": 1}, 0),
    "kappa": ({"de": 1}, {"nf": 1}, G_FACES),
    "jtilde": ({"dt": 1}, {"nv": 1}, 0),
    # j~ / (1 + j~) written as a single ratio
    "jtilde_frac": ({"dt": 1}, {"nv": 1, "dt": 1}, 0),
}


def ratio(kind: str, S: SubgraphView, allow_boundary: bool = False) -> Fraction:
    b = boundaries(S, allow_boundary=allow_boundary)
    if kind == "iota":
        return Fraction(b.edge_boundary, b.volume)
    if kind == "j":
        return Fraction(b.vertex_boundary, b.n_vertices)
    if kind == "kappa":
        if b.n_faces == 0:
            raise EmptyFaceSet("kappa needs F(S) nonempty")
        return Fraction(b.surrounding_edges, b.n_faces)
    if kind == "jtilde":
        return Fraction(b.outer_vertex_boundary, b.n_vertices)
    raise ValueError(f"unknown ratio kind {kind!r}")


@dataclass
class IsoperimetricEstimate:
    kind: str
    value: Fraction
    witness: SubgraphView
    search_cap: int
    host_radius: int | None = None
    family: str = "fill(S), S connected interior, |V(S)| <= cap"
    nodes: int = 0
    measures: dict = field(default_factory=dict)

    def as_row(self) -> dict:
        return {
            "kind": self.kind,
            "value": f"{self.value.numerator}/{self.value.denominator}",
            "search_cap": self.search_cap,
            "host_radius": self.host_radius,
            "witness": list(self.witness.sorted_vertices),
            "family": self.family,
        }


def _host_radius(host: PlanarMap):
    p = host.family.get("params", {}) if host.family else {}
    for key in ("radius", "N", "n"):
        if key in p:
            return p[key]
    return None


def estimate_many(
    host: PlanarMap,
    kinds,
    search_cap: int,
    fill: bool = True,
    extra_witnesses=(),
    restrict=None,
    max_cap: int = DEFAULT_CAP,
) -> dict:
    """Exact minima of several ratios over one scan.

    ``extra_witnesses`` are vertex sets (for example generator witness blocks
    larger than the cap) that join the searched family after filling.
    """
    if search_cap > max_cap:
        raise CapExceeded(f"search_cap={search_cap} exceeds {max_cap}")
    kinds = list(kinds)
    objectives = [(*RATIO_TERMS[k][:2], RATIO_TERMS[k][2], 1) for k in kinds]
    if restrict is None:
        arr = host_arrays(host)
    else:
        arr = host_arrays(host, allowed=np.asarray(restrict, bool) & host.interior)
    res = run_scan(arr, search_cap, fill=fill, objectives=objectives)
    out = {}
    for k, best in zip(kinds, res.best):
        cand = []
        if best is not None:
            num, den, wit, meas = best
            cand.append((Fraction(num, den), tuple(wit), meas))
        for ws in extra_witnesses:
            S = SubgraphView(host, ws)
            if fill:
                S = fill_holes(S)
            try:
                val = _kind_value(k, S)
            except EmptyFaceSet:
                continue
            cand.append((val, S.sorted_vertices, {}))
        if not cand:
            raise EmptyFaceSet(f"no subgraph in the family has a defined {k} ratio")
        cand.sort(key=lambda c: (c[0], c[1]))
        val, wit, meas = cand[0]
        fam = "fill(S), S connected interior, |V(S)| <= cap" if fill else "S connected interior, |V(S)| <= cap"
        if extra_witnesses:
            fam += ", plus generator witnesses"
        out[k] = IsoperimetricEstimate(k, val, SubgraphView(host, wit), search_cap, _host_radius(host), fam, res.nodes, meas)
    return out


def _kind_value(kind: str, S: SubgraphView) -> Fraction:
    if kind == "jtilde_frac":
        r = ratio("jtilde", S)
        return r / (1 + r)
    return ratio(kind, S)


def estimate(host: PlanarMap, kind: str, search_cap: int, fill: bool = True, extra_witnesses=(), restrict=None) -> IsoperimetricEstimate:
    if kind not in KINDS:
        raise ValueError(f"unknown ratio kind {kind!r}")
    return estimate_many(host, [kind], search_cap, fill, extra_witnesses, restrict)[kind]


@dataclass
class IdentityReport:
    min_j: Fraction
    min_jtilde: Fraction
    min_jtilde_frac: Fraction
    equal: bool
    witness_j: tuple
    witness_jtilde: tuple
    companion_checks: int
    companion_failures: int
    companion_in_family: bool
    search_cap: int

    def as_dict(self) -> dict:
        d = dict(self.__dict__)
        for k in ("min_j", "min_jtilde", "min_jtilde_frac"):
            d[k] = f"{d[k].numerator}/{d[k].denominator}"
        return d


def jtilde_identity_check(host: PlanarMap, search_cap: int, fill: bool = True) -> IdentityReport:
    """Compare min j with min j~/(1+j~) over the same family, and check the
    pointwise companion inequalities on the two witnesses.

    For S' = S plus its outer vertex boundary, |d_v S'| <= |outer boundary of S|
    and |V(S')| = |V(S)| + |outer boundary of S|, so j(S') <= j~(S)/(1+j~(S)).
    For S'' = S minus d_v S, the outer boundary of S'' lies in d_v S, so
    j~(S'')/(1+j~(S'')) <= j(S) whenever S'' is nonempty.
    """
    est = estimate_many(host, ["j", "jtilde", "jtilde_frac"], search_cap, fill=fill)
    ej, et, ef = est["j"], est["jtilde"], est["jtilde_frac"]
    checks = fails = 0
    in_family = True
    # companion of the j~ witness
    S = ef.witness
    Sp = SubgraphView(host, set(S.vertices) | set(S.outer_vertex_boundary()))
    if host.interior[list(Sp.vertices)].all():
        checks += 1
        if ratio("j", Sp) > _kind_value("jtilde_frac", S):
            fails += 1
        in_family &= len(Sp) <= search_cap
    else:
        in_family = False
    # companion of the j witness
    T = ej.witness
    Tpp = SubgraphView(host, set(T.vertices) - set(T.vertex_boundary()))
    if Tpp.vertices:
        checks += 1
        if _kind_value("jtilde_frac", Tpp) > ratio("j", T):
            fails += 1
    return IdentityReport(
        ej.value, et.value, ef.value, ej.value == ef.value, ej.witness.sorted_vertices, ef.witness.sorted_vertices,
        checks, fails, in_family, search_cap,
    )


@dataclass
class TransferReport:
    polygons: int
    violations: int
    equalities: int
    c1: Fraction | None
    c2: Fraction | None
    c2_bound_ok: bool
    kappa_host: Fraction | None
    iota_dual_of_witness: Fraction | None
    boundary_match: bool | None
    witness: tuple
    violation_witness: tuple = ()

    def as_dict(self) -> dict:
        d = dict(self.__dict__)
        for k in ("c1", "c2", "kappa_host", "iota_dual_of_witness"):
            if d[k] is not None:
                d[k] = f"{d[k].numerator}/{d[k].denominator}"
        return d


def dual_transfer_check(host: PlanarMap, search_cap: int, allow_violation: bool = False) -> TransferReport:
    """Over every polygon up to the cap: sum of face degrees <= 3|d_e S| + 6|F(S)|.

    Also reports the realized constants C1 = max |F|/|d_e| and
    C2 = max sum deg(f)/|d_e| (which must satisfy C2 <= 6 C1 + 3), and maps the
    kappa witness to the dual, where its face set has edge boundary |d_e S|
    and volume equal to the sum of its face degrees.
    """
    if not allow_violation:
        c = classify(host)
        dm = dual(host).map
        if not (c.standing and classify(dm).simple):
            raise AssumptionViolated("host and dual must satisfy the standing assumptions")
    arr = host_arrays(host)
    checks = [
        ({"de": 3, "nf": 6, "sumdegf": -1}, G_POLY, 1),
        ({"de": 3, "nf": 6, "sumdegf": -1, "one": -1}, G_POLY, 1),
    ]
    objectives = [
        ({"de": 1}, {"nf": 1}, G_POLY, 1),
        ({"de": 1}, {"sumdegf": 1}, G_POLY, 1),
    ]
    # the constant check -1 >= 0 fails on every guarded node, so it counts them
    checks.append(({"one": -1}, G_POLY, 1))
    res = run_scan(arr, search_cap, checks=checks, objectives=objectives)
    polys = res.violations[2]
    b1, b2 = res.best
    c1 = Fraction(b1[1], b1[0]) if b1 and b1[0] else None
    c2 = Fraction(b2[1], b2[0]) if b2 and b2[0] else None
    ok = c1 is None or c2 is None or c2 <= 6 * c1 + 3
    kappa = Fraction(b1[0], b1[1]) if b1 else None
    iota_dual = None
    match = None
    wit = ()
    if b1:
        wit = b1[2]
        S = SubgraphView(host, wit)
        dm = dual(host).map
        fm = np.zeros(dm.n_vertices, bool)
        fm[list(S.faces)] = True
        # dual edge e crosses primal edge e: it leaves S* iff exactly one flank is in F(S)
        fo = host.face_of_dart[host.edge_dart]
        ft = host.face_of_dart[host.twin[host.edge_dart]]
        cut = int(np.sum(fm[fo] != fm[ft]))
        vol = int(dm.degree[fm].sum())
        iota_dual = Fraction(cut, vol)
        match = cut == boundaries(S).surrounding_edges
    return TransferReport(
        polys, res.violations[0], res.violations[1] - res.violations[0], c1, c2, ok, kappa, iota_dual, match, wit,
        res.violation_witness[0],
    )

