"""Finite combinatorial maps (rotation systems over darts).

A map is stored as flat dart arrays: ``origin[d]``, ``twin[d]`` and
``rot_next[d]`` (the next dart counterclockwise around ``origin[d]``).
Faces are traced with ``next(d) = rot_next[twin[d]]``; with counterclockwise
rotations this walks every bounded face clockwise and the outer face
counterclockwise. Edge ``e`` is the dart pair whose smaller dart is the
``e``-th smallest among all pair minima.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import _trace
from .errors import (
    DisconnectedGraph,
    EulerViolation,
    MalformedRotation,
    MapError,
    NonInvolutiveTwin,
)

__all__ = [
    "PlanarMap",
    "FaceTable",
    "DualMap",
    "Classification",
    "build_map",
    "from_face_walks",
    "from_positions",
    "dual",
    "classify",
    "is_isomorphic",
    "load_json",
    "dump_json",
]


def _frozen(a, dtype=np.int64):
    a = np.ascontiguousarray(a, dtype=dtype)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class FaceTable:
    faces: tuple  # tuple of dart tuples, in tracing order
    degree: np.ndarray
    incident_vertices: tuple  # vertex walk per face, with multiplicity


class PlanarMap:
    """Immutable rotation system with traced faces and an explicit outer face."""

    def __init__(
        self,
        origin,
        twin,
        rot_next,
        outer_face_dart: int,
        n_vertices: int | None = None,
        interior=None,
        labels: Mapping[int, str] | None = None,
        groups: Mapping[str, Sequence[int]] | None = None,
        family: Mapping | None = None,
        positions=None,
    ):
        origin = np.asarray(origin, dtype=np.int64)
        twin = np.asarray(twin, dtype=np.int64)
        rot_next = np.asarray(rot_next, dtype=np.int64)
        nd = origin.shape[0]
        if twin.shape[0] != nd or rot_next.shape[0] != nd:
            raise MalformedRotation("dart arrays differ in length")
        nv = int(n_vertices) if n_vertices is not None else (int(origin.max()) + 1 if nd else 1)
        if nd:
            if twin.min() < 0 or twin.max() >= nd:
                raise NonInvolutiveTwin("twin points outside the dart range")
            idx = np.arange(nd)
            if np.any(twin[twin] != idx) or np.any(twin == idx):
                raise NonInvolutiveTwin("twin must be an involution without fixed points")
            if origin.min() < 0 or origin.max() >= nv:
                raise MalformedRotation("dart origin outside the vertex range")
            if rot_next.min() < 0 or rot_next.max() >= nd or np.unique(rot_next).shape[0] != nd:
                raise MalformedRotation("rotation successor is not a permutation of darts")
            if not _trace.rotation_cycles_ok(origin, rot_next, nv):
                raise MalformedRotation("each vertex must carry exactly one rotation cycle")
        deg = np.bincount(origin, minlength=nv) if nd else np.zeros(nv, np.int64)
        if nv > 1 and np.any(deg == 0):
            raise DisconnectedGraph("isolated vertex")

        self.n_vertices = nv
        self.n_darts = nd
        self.origin = _frozen(origin)
        self.twin = _frozen(twin)
        self.rot_next = _frozen(rot_next)
        rot_prev = np.empty(nd, np.int64)
        rot_prev[rot_next] = np.arange(nd)
        self.rot_prev = _frozen(rot_prev)
        self.target = _frozen(origin[twin] if nd else origin)
        self.degree = _frozen(deg)

        # rotation CSR: each vertex's darts in ccw order, starting at its smallest dart
        vptr = np.zeros(nv + 1, np.int64)
        vptr[1:] = np.cumsum(deg)
        vdarts = np.empty(nd, np.int64)
        if nd:
            first = np.full(nv, nd, np.int64)
            np.minimum.at(first, origin, np.arange(nd))
            _fill_rotations(vptr, first, rot_next, vdarts)
        self.vertex_ptr = _frozen(vptr)
        self.vertex_darts = _frozen(vdarts)

        if nd:
            comps = _trace.count_components(vptr, vdarts, self.target, nv)
            if comps != 1:
                raise DisconnectedGraph(f"graph has {comps} components")

        # edges
        mins = np.minimum(np.arange(nd), twin) if nd else np.zeros(0, np.int64)
        edge_dart = np.unique(mins)
        edge_of = np.searchsorted(edge_dart, mins) if nd else mins
        self.edge_dart = _frozen(edge_dart)
        self.edge_of_dart = _frozen(edge_of)
        self.n_edges = int(edge_dart.shape[0])

        # faces
        if nd:
            face_of, fdarts, fptr = _trace.trace_faces(twin, rot_next)
            nf = fptr.shape[0] - 1
        else:
            face_of = np.zeros(0, np.int64)
            fdarts = np.zeros(0, np.int64)
            fptr = np.zeros(2, np.int64)
            nf = 1
        self.face_of_dart = _frozen(face_of)
        self.face_darts = _frozen(fdarts)
        self.face_ptr = _frozen(fptr)
        self.n_faces = int(nf)
        self.face_degree = _frozen(np.diff(fptr))
        if nv - self.n_edges + nf != 2:
            raise EulerViolation(f"V - E + F = {nv - self.n_edges + nf}, expected 2")
        if nd:
            if not 0 <= int(outer_face_dart) < nd:
                raise MapError("outer face dart out of range")
            self.outer_face_dart = int(outer_face_dart)
            self.outer_face = int(face_of[outer_face_dart])
        else:
            self.outer_face_dart = -1
            self.outer_face = 0

        on_outer = np.zeros(nv, bool)
        if nd:
            od = fdarts[fptr[self.outer_face] : fptr[self.outer_face + 1]]
            on_outer[origin[od]] = True
        self.on_outer = _frozen(on_outer, bool)

        if interior is None:
            mask = np.ones(nv, bool)
        else:
            interior = np.asarray(interior)
            if interior.dtype == bool:
                if interior.shape[0] != nv:
                    raise MapError("interior mask length mismatch")
                mask = interior.copy()
            else:
                mask = np.zeros(nv, bool)
                mask[interior.astype(np.int64)] = True
        self.interior = _frozen(mask, bool)
        self.labels = dict(labels or {})
        self.groups = {k: tuple(int(x) for x in v) for k, v in (groups or {}).items()}
        self.family = dict(family or {})
        self.positions = None if positions is None else _frozen(positions, np.float64)
        self._cache: dict = {}

    # ----------------------------------------------------------------------------
    # basic queries
    # ----------------------------------------------------------------------------

    @property
    def all_interior(self) -> bool:
        return bool(self.interior.all())

    def rotation(self, v: int) -> tuple:
        return tuple(int(d) for d in self.vertex_darts[self.vertex_ptr[v] : self.vertex_ptr[v + 1]])

    @property
    def rotations(self) -> list:
        return [list(self.rotation(v)) for v in range(self.n_vertices)]

    def neighbors(self, v: int) -> tuple:
        """Neighbors in ccw order, with multiplicity."""
        return tuple(int(self.target[d]) for d in self.rotation(v))

    def face_cycle(self, f: int) -> tuple:
        return tuple(int(d) for d in self.face_darts[self.face_ptr[f] : self.face_ptr[f + 1]])

    def face_walk(self, f: int) -> tuple:
        """Vertex walk of a face (V(f) with multiplicity)."""
        return tuple(int(self.origin[d]) for d in self.face_cycle(f))

    def edge_endpoints(self, e: int) -> tuple:
        d = int(self.edge_dart[e])
        return int(self.origin[d]), int(self.target[d])

    def edge_faces(self, e: int) -> tuple:
        d = int(self.edge_dart[e])
        return int(self.face_of_dart[d]), int(self.face_of_dart[self.twin[d]])

    @property
    def bounded_faces(self) -> list:
        return [f for f in range(self.n_faces) if f != self.outer_face]

    @property
    def face_table(self) -> FaceTable:
        if "face_table" not in self._cache:
            faces = tuple(self.face_cycle(f) for f in range(self.n_faces))
            walks = tuple(self.face_walk(f) for f in range(self.n_faces))
            self._cache["face_table"] = FaceTable(faces, self.face_degree, walks)
        return self._cache["face_table"]

    def vertices_with_label(self, prefix: str) -> list:
        return sorted(v for v, s in self.labels.items() if s.startswith(prefix))

    def vertex_by_label(self, label: str) -> int:
        inv = self._cache.get("label_index")
        if inv is None:
            inv = {s: v for v, s in self.labels.items()}
            self._cache["label_index"] = inv
        return inv[label]

    def cache_get(self, key, factory):
        """Memoize a derived quantity on this (immutable) map."""
        if key not in self._cache:
            self._cache[key] = factory()
        return self._cache[key]

    def csr(self):
        """Distinct-neighbor adjacency (ptr, nbr), neighbors sorted by id."""
        if "csr" not in self._cache:
            src = self.origin
            dst = self.target
            keep = src != dst
            key = np.unique(src[keep] * self.n_vertices + dst[keep])
            u = key // self.n_vertices
            w = key % self.n_vertices
            ptr = np.zeros(self.n_vertices + 1, np.int64)
            ptr[1:] = np.cumsum(np.bincount(u, minlength=self.n_vertices))
            self._cache["csr"] = (_frozen(ptr), _frozen(w))
        return self._cache["csr"]

    def distances_from(self, source: int, blocked=None) -> np.ndarray:
        ptr, nbr = self.csr()
        if blocked is None:
            blocked = np.zeros(self.n_vertices, bool)
        return _trace.bfs_distances(ptr, nbr, int(source), blocked)

    def relabel_darts(self, perm) -> "PlanarMap":
        """Same map with dart d renamed perm[d]."""
        perm = np.asarray(perm, np.int64)
        inv = np.empty_like(perm)
        inv[perm] = np.arange(perm.shape[0])
        origin = self.origin[inv]
        twin = perm[self.twin[inv]]
        rot_next = perm[self.rot_next[inv]]
        return PlanarMap(
            origin,
            twin,
            rot_next,
            int(perm[self.outer_face_dart]),
            n_vertices=self.n_vertices,
            interior=self.interior,
            labels=self.labels,
            groups=self.groups,
            family=self.family,
            positions=self.positions,
        )

    def with_interior(self, interior) -> "PlanarMap":
        return PlanarMap(
            self.origin,
            self.twin,
            self.rot_next,
            self.outer_face_dart,
            n_vertices=self.n_vertices,
            interior=interior,
            labels=self.labels,
            groups=self.groups,
            family=self.family,
            positions=self.positions,
        )

    def __repr__(self):
        return (
            f"PlanarMap(V={self.n_vertices}, E={self.n_edges}, F={self.n_faces}, "
            f"interior={int(self.interior.sum())})"
        )

    # ----------------------------------------------------------------------------
    # serialization
    # ----------------------------------------------------------------------------

    def to_dict(self) -> dict:
        pairs = [[int(d), int(self.twin[d])] for d in self.edge_dart]
        out = {
            "vertices": [{"id": v, "rotation": list(self.rotation(v))} for v in range(self.n_vertices)],
            "twins": pairs,
            "outer_face_dart": self.outer_face_dart,
            "interior": [int(v) for v in np.flatnonzero(self.interior)],
            "labels": {str(v): s for v, s in sorted(self.labels.items())},
        }
        if self.groups:
            out["groups"] = {k: list(v) for k, v in sorted(self.groups.items())}
        if self.family:
            out["family"] = self.family
        if self.positions is not None:
            out["positions"] = [[round(float(x), 9), round(float(y), 9)] for x, y in self.positions]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def _fill_rotations(vptr, first, rot_next, vdarts):
    # python loop is fine up to a few million darts; vectorizing the cycle walk buys little
    pos = vptr[:-1].copy()
    nv = first.shape[0]
    for v in range(nv):
        d0 = first[v]
        if d0 >= rot_next.shape[0]:
            continue
        d = d0
        p = pos[v]
        while True:
            vdarts[p] = d
            p += 1
            d = rot_next[d]
            if d == d0:
                break


try:  # the rotation fill is a hot loop for large generated hosts
    from ._jit import njit as _njit

    _fill_rotations = _njit(_fill_rotations)
except Exception:  # pragma: no cover
    pass


# --------------------------------------------------------------------------------
# constructors
# --------------------------------------------------------------------------------


def build_map(
    rotations: Sequence[Sequence[int]],
    twins,
    outer_face_dart: int,
    interior=None,
    labels=None,
    groups=None,
    family=None,
    positions=None,
) -> PlanarMap:
    """Build and validate a map from ccw rotations and a twin pairing.

    ``twins`` is either a flat list with ``twins[d]`` the reverse dart, or a
    list of ``[d1, d2]`` pairs.
    """
    nv = len(rotations)
    darts = [d for rot in rotations for d in rot]
    nd = len(darts)
    if sorted(darts) != list(range(nd)):
        raise MalformedRotation("every dart must appear exactly once across all rotations")
    origin = np.empty(nd, np.int64)
    rot_next = np.empty(nd, np.int64)
    for v, rot in enumerate(rotations):
        k = len(rot)
        for i, d in enumerate(rot):
            origin[d] = v
            rot_next[d] = rot[(i + 1) % k]
    twin = np.full(nd, -1, np.int64)
    twins = list(twins)
    if twins and isinstance(twins[0], (list, tuple)):
        for a, b in twins:
            if not (0 <= a < nd and 0 <= b < nd) or twin[a] != -1 or twin[b] != -1:
                raise NonInvolutiveTwin(f"bad twin pair {a},{b}")
            twin[a] = b
            twin[b] = a
    else:
        if len(twins) != nd:
            raise NonInvolutiveTwin("twin list length differs from dart count")
        twin[:] = twins
    if np.any(twin < 0):
        raise NonInvolutiveTwin("some darts have no twin")
    return PlanarMap(
        origin,
        twin,
        rot_next,
        outer_face_dart,
        n_vertices=nv,
        interior=interior,
        labels=labels,
        groups=groups,
        family=family,
        positions=positions,
    )


def from_face_walks(
    walks: Sequence[Sequence[int]],
    outer_index: int,
    n_vertices: int | None = None,
    interior=None,
    labels=None,
    groups=None,
    family=None,
    positions=None,
) -> PlanarMap:
    """Build a simple map from its face walks in tracing order.

    Every directed edge must occur exactly once over all walks (bounded faces
    clockwise, the outer face counterclockwise). Darts ``2e``/``2e+1`` are the
    low-to-high / high-to-low directions of the ``e``-th edge in lexicographic
    order of ``(min, max)``.
    """
    lens = np.fromiter((len(w) for w in walks), np.int64, count=len(walks))
    flat = np.fromiter((v for w in walks for v in w), np.int64, count=int(lens.sum()))
    nv = int(n_vertices if n_vertices is not None else flat.max() + 1)
    starts = np.zeros(len(walks) + 1, np.int64)
    starts[1:] = np.cumsum(lens)
    nxt_idx = np.arange(flat.shape[0]) + 1
    ends = starts[1:] - 1
    nxt_idx[ends] = starts[:-1]
    u = flat
    w = flat[nxt_idx]
    if np.any(u == w):
        raise MalformedRotation("self-loops are not supported by the face-walk builder")
    key = u * nv + w
    order = np.argsort(key, kind="stable")
    sk = key[order]
    if np.any(sk[1:] == sk[:-1]):
        raise MalformedRotation("a directed edge occurs twice among the face walks")
    rkey = w * nv + u
    pos = np.searchsorted(sk, rkey)
    pos_c = np.minimum(pos, sk.shape[0] - 1)
    if np.any(sk[pos_c] != rkey):
        raise MalformedRotation("face walks do not pair every edge with its reverse")
    lo = np.minimum(u, w)
    hi = np.maximum(u, w)
    ukey = np.unique(lo * nv + hi)
    e = np.searchsorted(ukey, lo * nv + hi)
    dart = 2 * e + (u > w)
    nd = 2 * ukey.shape[0]
    origin = np.empty(nd, np.int64)
    origin[dart] = u
    twin = np.arange(nd) ^ 1
    rot_next = np.empty(nd, np.int64)
    # consecutive darts d1 = (u->v), d2 = (v->x) along a walk: rot_next[twin(d1)] = d2
    rot_next[twin[dart]] = dart[nxt_idx]
    outer_dart = int(dart[starts[outer_index]])
    return PlanarMap(
        origin,
        twin,
        rot_next,
        outer_dart,
        n_vertices=nv,
        interior=interior,
        labels=labels,
        groups=groups,
        family=family,
        positions=positions,
    )


def from_positions(
    positions,
    edges: Iterable[Sequence[int]],
    interior=None,
    labels=None,
    groups=None,
    family=None,
) -> PlanarMap:
    """Build a simple map from a straight-line drawing.

    Rotations come from sorting neighbor directions by angle; the outer face
    is the traced face of largest signed area.
    """
    pos = np.asarray(positions, np.float64)
    nv = pos.shape[0]
    e = np.asarray(sorted({(min(a, b), max(a, b)) for a, b in edges}), np.int64).reshape(-1, 2)
    ne = e.shape[0]
    nd = 2 * ne
    origin = np.empty(nd, np.int64)
    origin[0::2] = e[:, 0]
    origin[1::2] = e[:, 1]
    twin = np.arange(nd) ^ 1
    tgt = origin[twin]
    vec = pos[tgt] - pos[origin]
    ang = np.arctan2(vec[:, 1], vec[:, 0])
    order = np.lexsort((ang, origin))
    rot_next = np.empty(nd, np.int64)
    so = origin[order]
    first = np.searchsorted(so, np.arange(nv))
    last = np.searchsorted(so, np.arange(nv), side="right") - 1
    nxt = np.arange(nd) + 1
    nxt[last[last >= first]] = first[last >= first]
    rot_next[order] = order[nxt]
    face_of, fdarts, fptr = _trace.trace_faces(twin, rot_next)
    x = pos[origin, 0]
    y = pos[origin, 1]
    cross = x * y[twin] - x[twin] * y  # shoelace term of each dart
    area = np.bincount(face_of, weights=cross)
    outer = int(np.argmax(area))
    outer_dart = int(fdarts[fptr[outer]])
    return PlanarMap(
        origin,
        twin,
        rot_next,
        outer_dart,
        n_vertices=nv,
        interior=interior,
        labels=labels,
        groups=groups,
        family=family,
        positions=pos,
    )


# --------------------------------------------------------------------------------
# duality
# --------------------------------------------------------------------------------


@dataclass(frozen=True)
class DualMap:
    map: PlanarMap
    edge_bijection: np.ndarray  # primal edge id -> dual edge id


def dual(m: PlanarMap) -> DualMap:
    """Dual map on the same dart ids.

    Dual dart d leaves face_of_dart[d] and crosses primal dart d; the dual
    rotation at a face lists its boundary darts in reverse tracing order, which
    is counterclockwise around the face. Dual faces correspond to primal
    vertices. The dual outer face is the one around the origin of the primal
    outer-face dart.
    """
    if m.n_darts == 0:
        raise MapError("the one-vertex map has no dual")
    rot_next = m.twin[m.rot_prev]
    if m.all_interior:
        mask = np.ones(m.n_faces, bool)
    else:
        mask = np.zeros(m.n_faces, bool)
        bad = ~m.interior[m.origin]
        for f in range(m.n_faces):
            if f == m.outer_face:
                continue
            seg = m.face_darts[m.face_ptr[f] : m.face_ptr[f + 1]]
            mask[f] = not bad[seg].any()
    dm = PlanarMap(
        m.face_of_dart,
        m.twin,
        rot_next,
        int(m.twin[m.outer_face_dart]),
        n_vertices=m.n_faces,
        interior=mask,
        family={"dual_of": m.family} if m.family else None,
    )
    # both maps number edges by their smaller dart, so edge ids coincide
    return DualMap(dm, _frozen(np.arange(m.n_edges)))


def is_isomorphic(a: PlanarMap, b: PlanarMap) -> bool:
    """Orientation-preserving isomorphism of combinatorial maps (ignores outer face)."""
    if (a.n_vertices, a.n_darts, a.n_faces) != (b.n_vertices, b.n_darts, b.n_faces):
        return False
    if a.n_darts == 0:
        return True
    if sorted(a.degree.tolist()) != sorted(b.degree.tolist()):
        return False
    if sorted(a.face_degree.tolist()) != sorted(b.face_degree.tolist()):
        return False
    for cand in range(b.n_darts):
        phi = np.full(a.n_darts, -1, np.int64)
        used = np.zeros(b.n_darts, bool)
        phi[0] = cand
        used[cand] = True
        stack = [0]
        ok = True
        while stack and ok:
            d = stack.pop()
            for fa, fb in ((a.twin, b.twin), (a.rot_next, b.rot_next)):
                x, y = int(fa[d]), int(fb[phi[d]])
                if phi[x] == -1:
                    if used[y]:
                        ok = False
                        break
                    phi[x] = y
                    used[y] = True
                    stack.append(x)
                elif phi[x] != y:
                    ok = False
                    break
        if ok and (phi >= 0).all():
            return True
    return False


# --------------------------------------------------------------------------------
# classification
# --------------------------------------------------------------------------------


@dataclass(frozen=True)
class Classification:
    simple: bool
    dual_simple: bool
    proper: bool
    normal: bool
    min_vertex_degree: int
    min_face_degree: int
    max_face_degree: int

    @property
    def standing(self) -> bool:
        """G and G* simple with all vertex and face degrees at least 3."""
        return self.simple and self.dual_simple and self.min_vertex_degree >= 3 and self.min_face_degree >= 3

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


def _is_simple(origin, target, twin, nv) -> bool:
    if np.any(origin == target):
        return False
    key = origin * nv + target
    return np.unique(key).shape[0] == key.shape[0]


def classify(m: PlanarMap) -> Classification:
    if "classification" in m._cache:
        return m._cache["classification"]
    nv = m.n_vertices
    simple = _is_simple(m.origin, m.target, m.twin, nv)
    # dual darts leave face_of_dart[d] and reach face_of_dart[twin[d]]
    fo = m.face_of_dart
    ft = fo[m.twin]
    if m.all_interior:
        dual_simple = _is_simple(fo, ft, m.twin, m.n_faces)
    else:
        # in a truncation the outer face stands for the missing exterior, not a real face
        keep = (fo != m.outer_face) & (ft != m.outer_face)
        dual_simple = _is_simple(fo[keep], ft[keep], None, m.n_faces)

    bounded = [f for f in range(m.n_faces) if f != m.outer_face]
    walks = {f: m.face_walk(f) for f in bounded}
    proper = all(len(set(w)) == len(w) for w in walks.values())

    normal = False
    if proper and simple:
        normal = True
        face_edges = {}
        for f in bounded:
            es = frozenset(int(m.edge_of_dart[d]) for d in m.face_cycle(f))
            face_edges[f] = es
        pair_faces: dict = {}
        for f, w in walks.items():
            vs = sorted(set(w))
            if len(vs) > 12:
                # large faces: bucket by vertex instead of by vertex pair
                continue
            for i in range(len(vs)):
                for j in range(i + 1, len(vs)):
                    pair_faces.setdefault((vs[i], vs[j]), []).append(f)
        big = [f for f, w in walks.items() if len(set(w)) > 12]
        checked = set()
        for fs in pair_faces.values():
            for i in range(len(fs)):
                for j in range(i + 1, len(fs)):
                    key = (fs[i], fs[j])
                    if key in checked:
                        continue
                    checked.add(key)
                    if not _faces_meet_normally(m, walks[fs[i]], walks[fs[j]], face_edges[fs[i]], face_edges[fs[j]]):
                        normal = False
        if normal and big:
            for f in big:
                for g in bounded:
                    if g != f and not _faces_meet_normally(m, walks[f], walks[g], face_edges[f], face_edges[g]):
                        normal = False
                        break

    region = m.interior
    vdeg = m.degree[region] if region.any() else m.degree
    fdeg = []
    for f in bounded:
        w = walks[f]
        if m.all_interior or any(region[v] for v in w):
            fdeg.append(len(w))
    if not fdeg:
        fdeg = [int(m.face_degree[m.outer_face])]
    out = Classification(
        simple=bool(simple),
        dual_simple=bool(dual_simple),
        proper=bool(proper),
        normal=bool(normal),
        min_vertex_degree=int(vdeg.min()) if vdeg.size else 0,
        min_face_degree=int(min(fdeg)),
        max_face_degree=int(max(fdeg)),
    )
    m._cache["classification"] = out
    return out


def _faces_meet_normally(m, wa, wb, ea, eb) -> bool:
    shared = set(wa) & set(wb)
    if len(shared) <= 1:
        return True
    if len(shared) > 2:
        return False
    common = ea & eb
    if len(common) != 1:
        return False
    (e,) = common
    return set(m.edge_endpoints(e)) == shared


# --------------------------------------------------------------------------------
# json
# --------------------------------------------------------------------------------


def map_from_dict(data: Mapping) -> PlanarMap:
    verts = sorted(data["vertices"], key=lambda r: r["id"])
    if [r["id"] for r in verts] != list(range(len(verts))):
        raise MapError("vertex ids must be 0..n-1")
    rotations = [list(r["rotation"]) for r in verts]
    labels = {int(k): v for k, v in data.get("labels", {}).items()}
    return build_map(
        rotations,
        [list(p) for p in data["twins"]],
        int(data["outer_face_dart"]),
        interior=np.asarray(data["interior"], np.int64) if "interior" in data else None,
        labels=labels,
        groups=data.get("groups"),
        family=data.get("family"),
        positions=data.get("positions"),
    )


def load_json(path) -> PlanarMap:
    with open(path) as fh:
        return map_from_dict(json.load(fh))


def dump_json(m: PlanarMap, path) -> None:
    with open(path, "w") as fh:
        fh.write(m.to_json())
        fh.write("\n")
