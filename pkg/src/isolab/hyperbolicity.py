"""Gromov-hyperbolicity diagnostics on finite graphs.

Thinness uses the vertex convention: a geodesic triangle is delta-thin when
every vertex of one side lies within delta of the vertices of the other two
sides. In ``all`` mode every choice of geodesic sides is considered. For a
side point p and endpoints x, y, the farthest a geodesic from x to y can stay
from p is a bottleneck path problem on the BFS DAG of x, so the worst
triangle is found without listing geodesics.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ._jit import njit, prange
from .errors import (
    BallTouchesTruncationBoundary,
    CapExceeded,
    Disconnected,
    NoDetourExists,
    NotTriangulation,
    TooSmallT,
)
from .planar_map import PlanarMap, classify

__all__ = [
    "MetricTable",
    "ThinnessReport",
    "DetourProbe",
    "GrowthReport",
    "AdjacencyHost",
    "layered_host",
    "metric",
    "thinness",
    "triangle_thinness",
    "detour_growth",
    "growth_bound_check",
    "growth_threshold",
    "THINNESS_CAP",
]

THINNESS_CAP = 300
_INF = np.iinfo(np.int32).max


# --------------------------------------------------------------------------------
# hosts given by adjacency only
# --------------------------------------------------------------------------------


@dataclass
class AdjacencyHost:
    """A graph known only through its CSR adjacency, with an interior mask."""

    ptr: np.ndarray
    nbr: np.ndarray
    interior: np.ndarray
    family: dict = field(default_factory=dict)
    ring_starts: np.ndarray | None = None

    @property
    def n_vertices(self) -> int:
        return int(self.ptr.shape[0] - 1)

    def csr(self):
        return self.ptr, self.nbr


def layered_host(k: int, radius: int) -> AdjacencyHost:
    """Radius-``radius`` ball of the {3, k} triangulation without face data.

    Numbering matches :func:`isolab.generators.triangulation_deg_k`; the last
    ring is the frontier.
    """
    from .generators import layered_adjacency

    adj, deg, starts = layered_adjacency(k, radius)
    n = adj.shape[0]
    ptr = np.zeros(n + 1, np.int64)
    np.cumsum(deg, out=ptr[1:])
    nbr = adj[adj >= 0].astype(np.int32)
    del adj
    interior = np.ones(n, bool)
    interior[int(starts[radius]) :] = False
    fam = {"name": "triangulation_deg_k", "params": {"k": k, "radius": radius}, "triangulation": True, "simple": True}
    return AdjacencyHost(ptr, nbr, interior, fam, np.asarray(starts))


def _csr(host):
    ptr, nbr = host.csr()
    return np.ascontiguousarray(ptr, np.int64), np.ascontiguousarray(nbr, np.int32)


# --------------------------------------------------------------------------------
# kernels
# --------------------------------------------------------------------------------


@njit
def _bfs(ptr, nbr, src, blocked):
    n = ptr.shape[0] - 1
    dist = np.full(n, -1, np.int32)
    if blocked[src]:
        return dist
    queue = np.empty(n, np.int32)
    dist[src] = 0
    queue[0] = src
    head = 0
    tail = 1
    while head < tail:
        v = queue[head]
        head += 1
        dv = dist[v] + 1
        for i in range(ptr[v], ptr[v + 1]):
            w = nbr[i]
            if dist[w] < 0 and not blocked[w]:
                dist[w] = dv
                queue[tail] = w
                tail += 1
    return dist


@njit(parallel=True)
def _apsp(ptr, nbr):
    n = ptr.shape[0] - 1
    out = np.empty((n, n), np.int32)
    none = np.zeros(n, np.bool_)
    for s in prange(n):
        out[s, :] = _bfs(ptr, nbr, s, none)
    return out


@njit
def _bfs_orders(dist):
    """Per source, vertices sorted by distance (counting sort)."""
    n = dist.shape[0]
    order = np.empty((n, n), np.int32)
    for x in range(n):
        dmax = 0
        for v in range(n):
            if dist[x, v] > dmax:
                dmax = dist[x, v]
        cnt = np.zeros(dmax + 2, np.int64)
        for v in range(n):
            cnt[dist[x, v] + 1] += 1
        for i in range(1, dmax + 2):
            cnt[i] += cnt[i - 1]
        for v in range(n):
            k = dist[x, v]
            order[x, cnt[k]] = v
            cnt[k] += 1
    return order


@njit
def _bottleneck_table(ptr, nbr, dist, order, p, H):
    """H[x, y] = max over geodesics from x to y of the min distance from p to the geodesic."""
    n = dist.shape[0]
    for x in range(n):
        for i in range(n):
            v = order[x, i]
            dpv = dist[p, v]
            if i == 0:
                H[x, v] = dpv
                continue
            best = -1
            dv = dist[x, v] - 1
            for j in range(ptr[v], ptr[v + 1]):
                u = nbr[j]
                if dist[x, u] == dv and H[x, u] > best:
                    best = H[x, u]
            H[x, v] = dpv if dpv < best else best


@njit(parallel=True)
def _thinness_all(ptr, nbr, dist, order):
    n = dist.shape[0]
    best = np.full(n, -1, np.int32)
    wit = np.full((n, 3), -1, np.int32)
    for p in prange(n):
        H = np.empty((n, n), np.int32)
        _bottleneck_table(ptr, nbr, dist, order, p, H)
        bp = -1
        for a in range(n):
            dpa = dist[p, a]
            for b in range(a, n):
                if dpa + dist[p, b] != dist[a, b]:
                    continue
                ub = dpa if dpa < dist[p, b] else dist[p, b]
                if ub <= bp:
                    continue
                for c in range(n):
                    h1 = H[b, c]
                    h2 = H[c, a]
                    val = h1 if h1 < h2 else h2
                    if val > bp:
                        bp = val
                        wit[p, 0] = a
                        wit[p, 1] = b
                        wit[p, 2] = c
                        if bp == ub:
                            break
        best[p] = bp
    return best, wit


# --------------------------------------------------------------------------------
# metric
# --------------------------------------------------------------------------------


@dataclass
class MetricTable:
    """All-pairs unit-length distances; geodesics are read off the BFS DAG."""

    distances: np.ndarray
    ptr: np.ndarray
    nbr: np.ndarray

    @property
    def n(self) -> int:
        return self.distances.shape[0]

    def d(self, a: int, b: int) -> int:
        return int(self.distances[a, b])

    def predecessors(self, src: int, v: int) -> list:
        """Neighbors of v one step closer to src: the geodesic DAG of src."""
        dv = self.distances[src, v]
        return [int(u) for u in self.nbr[self.ptr[v] : self.ptr[v + 1]] if self.distances[src, u] == dv - 1]

    def interval(self, a: int, b: int) -> np.ndarray:
        D = self.distances
        return np.flatnonzero(D[a] + D[b] == D[a, b])

    def canonical_geodesic(self, a: int, b: int) -> list:
        """Geodesic from a to b that always steps to the smallest eligible neighbor."""
        path = [int(a)]
        v = int(a)
        while v != b:
            v = min(int(w) for w in self.nbr[self.ptr[v] : self.ptr[v + 1]] if self.distances[b, w] == self.distances[b, v] - 1)
            path.append(v)
        return path

    def geodesic_count(self, a: int, b: int) -> int:
        cnt = {int(a): 1}
        for v in sorted(self.interval(a, b), key=lambda x: self.distances[a, x]):
            v = int(v)
            if v == a:
                continue
            cnt[v] = sum(cnt.get(u, 0) for u in self.predecessors(a, v))
        return cnt[int(b)]


def metric(host) -> MetricTable:
    ptr, nbr = _csr(host)
    D = _apsp(ptr, nbr)
    if (D < 0).any():
        raise Disconnected("host graph is not connected")
    return MetricTable(D, ptr, nbr)


# --------------------------------------------------------------------------------
# thinness
# --------------------------------------------------------------------------------


@dataclass
class ThinnessReport:
    delta: int
    worst_triangle: tuple  # (a, b, c)
    side_point: int  # vertex on side [a, b] realizing delta
    sides: tuple  # three explicit geodesics (ab, bc, ca) realizing delta
    mode: str
    sample: tuple = ()
    n_vertices: int = 0

    def reevaluate(self, M: MetricTable) -> int:
        """Thinness of the stored explicit triangle, from distances alone."""
        return triangle_thinness(M, self.sides)

    def as_dict(self) -> dict:
        return {
            "delta": self.delta,
            "worst_triangle": list(self.worst_triangle),
            "side_point": self.side_point,
            "sides": [list(s) for s in self.sides],
            "mode": self.mode,
            "n_vertices": self.n_vertices,
        }


def triangle_thinness(M: MetricTable, sides) -> int:
    """Max over the three sides of the farthest vertex from the other two sides."""
    D = M.distances
    worst = 0
    for i in range(3):
        own = list(sides[i])
        other = list(sides[(i + 1) % 3]) + list(sides[(i + 2) % 3])
        worst = max(worst, int(D[np.ix_(own, other)].min(axis=1).max()))
    return worst


def _widest_geodesic(M: MetricTable, p: int, x: int, y: int) -> tuple:
    """(value, path): geodesic from x to y staying as far from p as possible."""
    D = M.distances
    iv = sorted((int(v) for v in M.interval(x, y)), key=lambda v: D[x, v])
    H = {}
    back = {}
    for v in iv:
        if v == x:
            H[v] = int(D[p, v])
            continue
        preds = [u for u in M.predecessors(x, v) if u in H]
        u = max(preds, key=lambda u: (H[u], -u))
        H[v] = min(int(D[p, v]), H[u])
        back[v] = u
    path = [y]
    while path[-1] != x:
        path.append(back[path[-1]])
    return H[y], path[::-1]


def _explicit(M: MetricTable, a, b, c, p):
    _, bc = _widest_geodesic(M, p, b, c)
    _, ca = _widest_geodesic(M, p, c, a)
    ab = M.canonical_geodesic(a, p)[:-1] + M.canonical_geodesic(p, b)
    return (tuple(ab), tuple(bc), tuple(ca))


def thinness(host, vertex_sample="all", cap: int = THINNESS_CAP, M: MetricTable | None = None) -> ThinnessReport:
    """Smallest delta for which every geodesic triangle is delta-thin.

    ``vertex_sample`` is ``"all"`` (every triple, every choice of geodesic
    sides; needs at most ``cap`` vertices) or ``("random", k, seed)``: triples
    from k random vertices, one canonical geodesic per pair. The sampled value
    never exceeds the exhaustive one.
    """
    n = host.n_vertices
    if vertex_sample == "all":
        if n > cap:
            raise CapExceeded(f"{n} vertices exceed the thinness cap {cap}")
        M = M or metric(host)
        order = _bfs_orders(M.distances)
        best, wit = _thinness_all(M.ptr, M.nbr, M.distances, order)
        p = int(np.argmax(best))
        a, b, c = (int(x) for x in wit[p])
        delta = int(best[p])
        if delta <= 0:
            a = b = c = p = 0
            sides = ((0,), (0,), (0,))
        else:
            sides = _explicit(M, a, b, c, p)
        return ThinnessReport(delta, (a, b, c), p, sides, "all", (), n)
    kind, k, seed = vertex_sample
    if kind != "random":
        raise ValueError(f"unknown vertex_sample {vertex_sample!r}")
    M = M or metric(host)
    rng = np.random.default_rng(seed)
    sample = tuple(int(v) for v in np.sort(rng.choice(n, size=min(k, n), replace=False)))
    geo = {}
    for i, a in enumerate(sample):
        for b in sample[i:]:
            g = M.canonical_geodesic(a, b)
            geo[(a, b)] = g
            geo[(b, a)] = g[::-1]
    delta, trip, point, sides = 0, (sample[0],) * 3, sample[0], ((sample[0],),) * 3
    D = M.distances
    for i, a in enumerate(sample):
        for j, b in enumerate(sample[i:], i):
            for c in sample[j:]:
                s = (geo[(a, b)], geo[(b, c)], geo[(c, a)])
                for t in range(3):
                    own = s[t]
                    other = list(s[(t + 1) % 3]) + list(s[(t + 2) % 3])
                    dd = D[np.ix_(own, other)].min(axis=1)
                    m = int(dd.max())
                    if m > delta:
                        delta, trip, point, sides = m, (a, b, c), int(own[int(dd.argmax())]), tuple(tuple(x) for x in s)
    return ThinnessReport(delta, trip, point, sides, "random", sample, n)


# --------------------------------------------------------------------------------
# detours
# --------------------------------------------------------------------------------


@dataclass(frozen=True)
class DetourProbe:
    t: int
    separating_center: int
    shortest_detour_length: int | None  # None: the ball separates a from b
    a: int
    b: int
    d_ab: int

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def _auto_endpoints(ptr, nbr, z, t, dz):
    sphere = np.flatnonzero(dz == t)
    if sphere.size == 0:
        raise NoDetourExists(f"no vertex at distance {t} from {z}")
    none = np.zeros(ptr.shape[0] - 1, np.bool_)
    for a in sphere[:8]:
        da = _bfs(ptr, nbr, int(a), none)
        far = sphere[da[sphere] == 2 * t]
        if far.size:
            return int(a), int(far[0]), 2 * t
    raise NoDetourExists(f"no geodesic of length {2 * t} through {z} with both ends at distance {t}")


def detour_growth(host, centers, t_values, allow_missing: bool = False) -> list:
    """Shortest a-b paths avoiding the open ball B(z, t) = {v : d(z, v) < t}.

    ``centers`` is either a triple (a, b, z) with z on a geodesic from a to b,
    or a single vertex z; then for each t the endpoints are the first pair at
    distance t from z that are 2t apart, so z is the midpoint of a geodesic.
    """
    ptr, nbr = _csr(host)
    n = ptr.shape[0] - 1
    interior = np.asarray(host.interior, bool)
    none = np.zeros(n, np.bool_)
    fixed = isinstance(centers, (tuple, list)) and len(centers) == 3
    z = int(centers[2] if fixed else centers)
    dz = _bfs(ptr, nbr, z, none)
    if (dz < 0).any():
        raise Disconnected("host graph is not connected")
    out = []
    for t in sorted(int(x) for x in t_values):
        ball = dz < t
        if not interior[ball].all():
            raise BallTouchesTruncationBoundary(f"B({z}, {t}) reaches the truncation frontier")
        if fixed:
            a, b = int(centers[0]), int(centers[1])
            d_ab = int(_bfs(ptr, nbr, a, none)[b])
            if dz[a] + dz[b] != d_ab:
                raise ValueError(f"{z} is not on a geodesic from {a} to {b}")
        else:
            a, b, d_ab = _auto_endpoints(ptr, nbr, z, t, dz)
        da = _bfs(ptr, nbr, a, ball)
        L = int(da[b]) if da[b] >= 0 else None
        if L is None and not allow_missing:
            raise NoDetourExists(f"B({z}, {t}) separates {a} from {b}")
        out.append(DetourProbe(t, z, L, a, b, d_ab))
    return out


# --------------------------------------------------------------------------------
# growth bound
# --------------------------------------------------------------------------------


def growth_threshold(j: Fraction, t: int) -> float:
    j = Fraction(j)
    return float(j / 2) * float(1 + j) ** (t / 8 - 1)


def _meets_bound(L: int, j: Fraction, t: int) -> bool:
    """Exact test of L >= (j/2)(1+j)^(t/8-1), via eighth powers."""
    if j == 0:
        return True
    lhs = (2 * Fraction(L) / j) ** 8
    e = t - 8
    rhs = (1 + j) ** e if e >= 0 else 1 / (1 + j) ** (-e)
    return lhs >= rhs


@dataclass
class GrowthReport:
    j_lower: Fraction
    rows: list
    ok: bool

    def as_dict(self) -> dict:
        return {"j_lower": f"{self.j_lower.numerator}/{self.j_lower.denominator}", "rows": self.rows, "ok": self.ok}


def _is_triangulation(host) -> bool:
    if isinstance(host, PlanarMap):
        fd = host.face_degree.copy()
        fd[host.outer_face] = 3
        return bool(classify(host).simple and (fd == 3).all())
    return bool(getattr(host, "family", {}).get("triangulation"))


def growth_bound_check(host, j_lower, probes) -> GrowthReport:
    """Every probe's detour length against (1/2) j (1+j)^(t/8 - 1); t >= 12 only."""
    if not _is_triangulation(host):
        raise NotTriangulation("the growth bound applies to simple triangulations")
    j = Fraction(j_lower)
    rows = []
    for pr in probes:
        if pr.t < 12:
            raise TooSmallT(f"t = {pr.t} < 12")
        thr = growth_threshold(j, pr.t)
        if pr.shortest_detour_length is None:
            rows.append({"t": pr.t, "length": None, "threshold": thr, "margin": float("inf"), "ok": True})
            continue
        L = pr.shortest_detour_length
        rows.append({"t": pr.t, "length": L, "threshold": thr, "margin": L - thr, "ok": _meets_bound(L, j, pr.t)})
    return GrowthReport(j, rows, all(r["ok"] for r in rows))
