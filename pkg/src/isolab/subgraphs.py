"""Induced subgraphs of a planar map, their boundary operators and shape predicates."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ._enum import G_POLY, G_SC, HostArrays, run_scan
from .errors import CapExceeded, NotSimplyConnected, TouchesTruncationBoundary
from .planar_map import PlanarMap

__all__ = [
    "SubgraphView",
    "BoundaryReport",
    "ShapeReport",
    "boundaries",
    "is_simply_connected",
    "classify_face_graph",
    "fill_holes",
    "enumerate_connected_subgraphs",
    "count_connected_subgraphs",
    "host_arrays",
    "DEFAULT_CAP",
]

DEFAULT_CAP = 14


@dataclass(frozen=True)
class BoundaryReport:
    edge_boundary: int
    vertex_boundary: int
    surrounding_edges: int
    face_boundary: int
    volume: int
    outer_vertex_boundary: int
    n_vertices: int
    n_edges: int
    n_faces: int

    @property
    def sizes(self) -> tuple:
        return (self.n_vertices, self.n_edges, self.n_faces)

    def as_dict(self) -> dict:
        return {
            "edge_boundary": self.edge_boundary,
            "vertex_boundary": self.vertex_boundary,
            "surrounding_edges": self.surrounding_edges,
            "face_boundary": self.face_boundary,
            "volume": self.volume,
            "outer_vertex_boundary": self.outer_vertex_boundary,
            "sizes": list(self.sizes),
        }


@dataclass(frozen=True)
class ShapeReport:
    face_graph: bool
    polygon: bool
    interior_connected: bool


class SubgraphView:
    """Induced subgraph of ``host`` on a vertex set; equality is set equality."""

    __slots__ = ("host", "vertices", "__dict__")

    def __init__(self, host: PlanarMap, vertices):
        self.host = host
        self.vertices = frozenset(int(v) for v in vertices)

    def __eq__(self, other):
        return isinstance(other, SubgraphView) and other.host is self.host and other.vertices == self.vertices

    def __hash__(self):
        return hash((id(self.host), self.vertices))

    def __len__(self):
        return len(self.vertices)

    def __repr__(self):
        return f"SubgraphView({sorted(self.vertices)})"

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.host.n_vertices, bool)
        m[list(self.vertices)] = True
        return m

    @cached_property
    def sorted_vertices(self) -> tuple:
        return tuple(sorted(self.vertices))

    @cached_property
    def edges(self) -> tuple:
        h = self.host
        a = h.origin[h.edge_dart]
        b = h.target[h.edge_dart]
        return tuple(int(e) for e in np.flatnonzero(self.mask[a] & self.mask[b]))

    @cached_property
    def faces(self) -> tuple:
        """Bounded host faces all of whose vertices lie in S."""
        h = self.host
        inside = self.mask[h.origin[h.face_darts]]
        full = np.logical_and.reduceat(inside, h.face_ptr[:-1]) if len(inside) else np.zeros(0, bool)
        full[h.outer_face] = False
        return tuple(int(f) for f in np.flatnonzero(full))

    @cached_property
    def face_mask(self) -> np.ndarray:
        fm = np.zeros(self.host.n_faces, bool)
        fm[list(self.faces)] = True
        return fm

    def vertex_boundary(self) -> tuple:
        h = self.host
        out = self.mask[h.origin] & ~self.mask[h.target]
        return tuple(sorted(set(int(v) for v in h.origin[out])))

    def outer_vertex_boundary(self) -> tuple:
        h = self.host
        out = self.mask[h.origin] & ~self.mask[h.target]
        return tuple(sorted(set(int(v) for v in h.target[out])))

    def surrounding_edges(self) -> tuple:
        """Edges of S with at least one flanking side outside F(S)."""
        h = self.host
        res = []
        for e in self.edges:
            d = h.edge_dart[e]
            if not (self.face_mask[h.face_of_dart[d]] and self.face_mask[h.face_of_dart[h.twin[d]]]):
                res.append(e)
        return tuple(res)

    def face_boundary(self) -> tuple:
        h = self.host
        se = set(self.surrounding_edges())
        res = []
        for f in self.faces:
            darts = h.face_darts[h.face_ptr[f] : h.face_ptr[f + 1]]
            if any(int(h.edge_of_dart[d]) in se for d in darts):
                res.append(f)
        return tuple(res)

    def is_connected(self) -> bool:
        if not self.vertices:
            return False
        ptr, nbr = self.host.csr()
        start = next(iter(self.vertices))
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in nbr[ptr[v] : ptr[v + 1]]:
                w = int(w)
                if w in self.vertices and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)

    def outside_components(self) -> tuple:
        """(escaping vertices, list of hole components) of host - S.

        The frontier (outer-face and non-interior vertices) counts as one
        territory, so a component escapes iff it contains a frontier vertex.
        """
        h = self.host
        ptr, nbr = h.csr()
        blocked = self.mask
        frontier = h.on_outer | ~h.interior
        comp = np.full(h.n_vertices, -1, np.int64)
        escaping = set()
        holes = []
        for s in range(h.n_vertices):
            if blocked[s] or comp[s] >= 0:
                continue
            cid = s
            comp[s] = cid
            stack = [s]
            members = []
            esc = False
            while stack:
                v = stack.pop()
                members.append(v)
                esc |= bool(frontier[v])
                for w in nbr[ptr[v] : ptr[v + 1]]:
                    if not blocked[w] and comp[w] < 0:
                        comp[w] = cid
                        stack.append(int(w))
            if esc:
                escaping.update(members)
            else:
                holes.append(tuple(sorted(members)))
        return escaping, holes

    def require_interior(self):
        bad = [v for v in self.vertices if not self.host.interior[v]]
        if bad:
            raise TouchesTruncationBoundary(f"vertices {sorted(bad)[:8]} are not interior")


def boundaries(S: SubgraphView, allow_boundary: bool = False) -> BoundaryReport:
    if not allow_boundary:
        S.require_interior()
    h = S.host
    out = S.mask[h.origin] & ~S.mask[h.target]
    return BoundaryReport(
        edge_boundary=int(out.sum()),
        vertex_boundary=len(S.vertex_boundary()),
        surrounding_edges=len(S.surrounding_edges()),
        face_boundary=len(S.face_boundary()),
        volume=int(h.degree[list(S.vertices)].sum()) if S.vertices else 0,
        outer_vertex_boundary=len(S.outer_vertex_boundary()),
        n_vertices=len(S.vertices),
        n_edges=len(S.edges),
        n_faces=len(S.faces),
    )


def is_simply_connected(S: SubgraphView) -> bool:
    """Connected, and host - S has one component (the frontier side is one territory)."""
    if not S.is_connected():
        return False
    _, holes = S.outside_components()
    return not holes


def fill_holes(S: SubgraphView, allow_boundary: bool = False) -> SubgraphView:
    """S together with every component of host - S that cannot reach the frontier."""
    if not allow_boundary:
        S.require_interior()
    _, holes = S.outside_components()
    if not holes:
        return S
    extra = set().union(*holes)
    return SubgraphView(S.host, S.vertices | extra)


def _face_components(h: PlanarMap, face_mask: np.ndarray) -> int:
    faces = np.flatnonzero(face_mask)
    seen = set()
    ncomp = 0
    for f0 in faces:
        f0 = int(f0)
        if f0 in seen:
            continue
        ncomp += 1
        seen.add(f0)
        stack = [f0]
        while stack:
            f = stack.pop()
            for d in h.face_darts[h.face_ptr[f] : h.face_ptr[f + 1]]:
                g = int(h.face_of_dart[h.twin[d]])
                if face_mask[g] and g not in seen:
                    seen.add(g)
                    stack.append(g)
    return ncomp


def classify_face_graph(S: SubgraphView) -> ShapeReport:
    h = S.host
    covered = set()
    for f in S.faces:
        covered.update(h.face_walk(f))
    face_graph = bool(S.faces) and covered == set(S.vertices)
    interior_connected = bool(S.faces) and _face_components(h, S.face_mask) == 1
    polygon = False
    if face_graph and interior_connected and is_simply_connected(S):
        # the complementary faces (outer face included) must form one dual component
        polygon = _face_components(h, ~S.face_mask) == 1
    return ShapeReport(face_graph=face_graph, polygon=polygon, interior_connected=interior_connected)


def host_arrays(host: PlanarMap, allowed=None, weights=None) -> HostArrays:
    if allowed is None and weights is None:
        return host.cache_get("host_arrays", lambda: HostArrays(host))
    return HostArrays(host, allowed=allowed, weights=weights)


def _check_cap(max_vertices: int, cap: int):
    if max_vertices > cap:
        raise CapExceeded(f"max_vertices={max_vertices} exceeds the configured cap {cap}")


def enumerate_connected_subgraphs(
    host: PlanarMap,
    max_vertices: int,
    restrict=None,
    cap: int = DEFAULT_CAP,
    simply_connected: bool = False,
    polygons: bool = False,
    limit: int = 5_000_000,
):
    """Yield every connected induced subgraph of the allowed region with at most
    ``max_vertices`` vertices exactly once, in the scan's deterministic order.

    ``restrict`` is a vertex mask or a predicate on vertex ids (default: the
    host interior). ``simply_connected`` / ``polygons`` filter the stream.
    """
    _check_cap(max_vertices, cap)
    allowed = _allowed_mask(host, restrict)
    guard = (G_SC if simply_connected else 0) | (G_POLY if polygons else 0)
    arr = host_arrays(host) if restrict is None else host_arrays(host, allowed=allowed)
    res = run_scan(arr, max_vertices, collect=(limit, guard, 0))
    if res.collect_overflow:
        raise CapExceeded(f"more than {limit} subgraphs; raise `limit` or lower max_vertices")
    for vs in res.collected:
        yield SubgraphView(host, vs)


def count_connected_subgraphs(host: PlanarMap, max_vertices: int, restrict=None, cap: int = DEFAULT_CAP) -> int:
    _check_cap(max_vertices, cap)
    allowed = _allowed_mask(host, restrict)
    arr = host_arrays(host) if restrict is None else host_arrays(host, allowed=allowed)
    return run_scan(arr, max_vertices).nodes


def _allowed_mask(host: PlanarMap, restrict) -> np.ndarray:
    if restrict is None:
        return host.interior.copy()
    if callable(restrict):
        return np.array([bool(restrict(v)) and host.interior[v] for v in range(host.n_vertices)])
    mask = np.asarray(restrict, bool)
    return mask & host.interior


def require_simply_connected(S: SubgraphView):
    if not is_simply_connected(S):
        raise NotSimplyConnected(f"{S!r} is not simply connected")
