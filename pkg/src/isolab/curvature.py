"""Exact combinatorial curvatures on edges, vertices and faces.

All values are :class:`fractions.Fraction`. Sums over the faces at a vertex
run over its corners (one per outgoing dart), so a face whose boundary walk
visits the vertex twice contributes twice; likewise a face's vertex sum runs
over its boundary walk.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import AssumptionViolated, EmptySet, NotInterior, PreconditionNotMet, RadiusExceedsInterior
from .planar_map import PlanarMap, classify
from .subgraphs import SubgraphView, boundaries, classify_face_graph, is_simply_connected

__all__ = [
    "CurvatureValue",
    "AverageReport",
    "EulerRecord",
    "edge_curvature",
    "vertex_curvature",
    "face_curvature",
    "vertex_curvatures",
    "curvature",
    "average",
    "upper_average_estimate",
    "verify_euler_bounds",
    "fmt",
    "HIGUCHI_GAP",
]

HIGUCHI_GAP = Fraction(1, 1806)

KINDS = ("phi", "psi", "chi", "chi1")


def fmt(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class CurvatureValue:
    value: Fraction
    carrier: str  # "edge" | "vertex" | "face"
    id: int
    non_proper: bool = False


@dataclass(frozen=True)
class AverageReport:
    mean: Fraction
    support_size: int
    witness: tuple
    kind: str = ""
    radius: int | None = None
    center: int | None = None


def _check_standing(host: PlanarMap, allow_violation: bool):
    if allow_violation:
        return
    c = classify(host)
    if not c.standing:
        raise AssumptionViolated(
            f"host fails the standing assumptions (simple={c.simple}, dual_simple={c.dual_simple}, "
            f"min vertex degree={c.min_vertex_degree}, min face degree={c.min_face_degree})"
        )


def _corner_face_inv(host: PlanarMap) -> list:
    """Per vertex: sum of 1/deg(face) over its corners."""

    def build():
        fdeg = host.face_degree[host.face_of_dart]
        out = [Fraction(0)] * host.n_vertices
        for d in range(host.n_darts):
            out[host.origin[d]] += Fraction(1, int(fdeg[d]))
        return out

    return host.cache_get("corner_face_inv", build)


def vertex_curvature(host: PlanarMap, v: int, allow_violation: bool = False) -> CurvatureValue:
    """psi(v) = 1 - deg(v)/2 + sum over corners at v of 1/deg(face)."""
    v = int(v)
    if not host.interior[v]:
        raise NotInterior(f"vertex {v} is not interior")
    _check_standing(host, allow_violation)
    val = 1 - Fraction(int(host.degree[v]), 2) + _corner_face_inv(host)[v]
    walks = [host.face_walk(int(host.face_of_dart[d])) for d in host.rotation(v)]
    return CurvatureValue(val, "vertex", v, any(len(set(w)) < len(w) for w in walks))


def face_curvature(host: PlanarMap, f: int, allow_violation: bool = False) -> CurvatureValue:
    """chi(f) = 1 - deg(f)/2 + sum over the boundary walk of 1/deg(w)."""
    f = int(f)
    if f == host.outer_face:
        raise NotInterior("the outer face has no curvature")
    walk = host.face_walk(f)
    if not all(host.interior[w] for w in walk):
        raise NotInterior(f"face {f} touches the truncation frontier")
    _check_standing(host, allow_violation)
    val = 1 - Fraction(len(walk), 2) + sum((Fraction(1, int(host.degree[w])) for w in walk), Fraction(0))
    return CurvatureValue(val, "face", f, len(set(walk)) < len(walk))


def edge_curvature(host: PlanarMap, e: int, allow_violation: bool = False) -> CurvatureValue:
    """phi(e) = sum of 1/deg over both ends + sum of 1/deg over both flanking faces - 1."""
    e = int(e)
    a, b = host.edge_endpoints(e)
    if not (host.interior[a] and host.interior[b]):
        raise NotInterior(f"edge {e} touches the truncation frontier")
    _check_standing(host, allow_violation)
    f1, f2 = host.edge_faces(e)
    val = (
        Fraction(1, int(host.degree[a]))
        + Fraction(1, int(host.degree[b]))
        + Fraction(1, int(host.face_degree[f1]))
        + Fraction(1, int(host.face_degree[f2]))
        - 1
    )
    return CurvatureValue(val, "edge", e)


def curvature(host: PlanarMap, kind: str, carrier: int, allow_violation: bool = False) -> Fraction:
    if kind == "phi":
        return edge_curvature(host, carrier, allow_violation).value
    if kind == "psi":
        return vertex_curvature(host, carrier, allow_violation).value
    if kind in ("chi", "chi1"):
        return face_curvature(host, carrier, allow_violation).value
    raise ValueError(f"unknown curvature kind {kind!r}")


def vertex_curvatures(host: PlanarMap, allow_violation: bool = False) -> dict:
    """psi on every interior vertex."""
    _check_standing(host, allow_violation)
    inv = _corner_face_inv(host)
    return {
        int(v): 1 - Fraction(int(host.degree[v]), 2) + inv[v] for v in np.flatnonzero(host.interior)
    }


def carriers(host: PlanarMap, kind: str, vertices=None) -> list:
    """Interior carriers of ``kind`` inside the induced subgraph on ``vertices`` (default: whole host)."""
    if vertices is None:
        mask = host.interior.copy()
    else:
        mask = np.zeros(host.n_vertices, bool)
        mask[list(vertices)] = True
        mask &= host.interior
    if kind == "psi":
        return [int(v) for v in np.flatnonzero(mask)]
    if kind == "phi":
        a = host.origin[host.edge_dart]
        b = host.target[host.edge_dart]
        return [int(e) for e in np.flatnonzero(mask[a] & mask[b])]
    if kind in ("chi", "chi1"):
        return list(SubgraphView(host, np.flatnonzero(mask)).faces)
    raise ValueError(f"unknown curvature kind {kind!r}")


def average(host: PlanarMap, kind: str, carrier_set, allow_violation: bool = False) -> AverageReport:
    items = list(carrier_set)
    if not items:
        raise EmptySet("average over an empty carrier set")
    total = sum((curvature(host, kind, c, allow_violation) for c in items), Fraction(0))
    return AverageReport(total / len(items), len(items), tuple(sorted(items)), kind)


def _ball(host: PlanarMap, center: int, r: int) -> np.ndarray:
    d = host.distances_from(center)
    return np.flatnonzero((d >= 0) & (d <= r))


def upper_average_estimate(
    host: PlanarMap, kind: str, radii, centers=None, allow_violation: bool = False
) -> list:
    """For each radius, the largest curvature mean over interior balls B(c, r).

    The witness family is the set of combinatorial balls of that radius that
    lie inside the interior; for ``chi1`` only balls that are polygons count.
    The result is a lower bound for the upper average, never the limsup itself.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown curvature kind {kind!r}")
    radii = [int(r) for r in radii]
    if any(b <= a for a, b in zip(radii, radii[1:])):
        raise ValueError("radii must be strictly increasing")
    _check_standing(host, allow_violation)
    if centers is None:
        centers = [int(v) for v in np.flatnonzero(host.interior)]
    inv_cache = {}
    out = []
    for r in radii:
        best = None
        for c in centers:
            ball = _ball(host, c, r)
            if not host.interior[ball].all():
                continue
            if kind == "chi1" and not classify_face_graph(SubgraphView(host, ball)).polygon:
                continue
            items = carriers(host, kind, ball)
            if not items:
                continue
            total = Fraction(0)
            for it in items:
                if (kind, it) not in inv_cache:
                    inv_cache[(kind, it)] = curvature(host, kind, it, True)
                total += inv_cache[(kind, it)]
            mean = total / len(items)
            if best is None or mean > best.mean:
                best = AverageReport(mean, len(items), tuple(int(x) for x in ball), kind, r, c)
        if best is None:
            raise RadiusExceedsInterior(f"no interior ball of radius {r}")
        out.append(best)
    return out


@dataclass(frozen=True)
class EulerRecord:
    facebound_lhs: int | None
    facebound_rhs: int | None
    facebound_ok: bool | None
    edgenumber_lhs: int | None
    edgenumber_rhs: int | None
    edgenumber_ok: bool | None
    polygon: bool

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def verify_euler_bounds(S: SubgraphView) -> EulerRecord:
    """|E| <= 2|dv| + 3|F| - 3 (simply connected, |V| >= 2) and
    2|E| = sum of face degrees + |de| (polygons)."""
    if not is_simply_connected(S):
        raise PreconditionNotMet("the face bound needs a simply connected subgraph")
    b = boundaries(S)
    fb_l = fb_r = fb_ok = None
    if b.n_vertices >= 2:
        fb_l = b.n_edges
        fb_r = 2 * b.vertex_boundary + 3 * b.n_faces - 3
        fb_ok = fb_l <= fb_r
    poly = classify_face_graph(S).polygon
    en_l = en_r = en_ok = None
    if poly:
        en_l = 2 * b.n_edges
        en_r = int(sum(S.host.face_degree[f] for f in S.faces)) + b.surrounding_edges
        en_ok = en_l == en_r
    return EulerRecord(fb_l, fb_r, fb_ok, en_l, en_r, en_ok, poly)
