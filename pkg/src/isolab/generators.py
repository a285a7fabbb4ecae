"""Deterministic builders for the graph families used throughout the package.

Every builder returns a :class:`PlanarMap` whose ``family`` attribute records
the exact parameters, whose ``interior`` mask excludes the truncation frontier
(the vertices on the outer face), and whose ``labels``/``groups`` expose the
named vertices and witness blocks of the construction.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from fractions import Fraction

import numpy as np

from ._jit import njit
from .errors import ScheduleTooLargeForRadius, SpacingViolated
from .planar_map import PlanarMap, from_face_walks, from_positions

__all__ = [
    "triangulation_deg_k",
    "square_lattice",
    "lambda_attachment",
    "nonnormal_chain",
    "g1_multiedge",
    "g2_multiedge_lattice",
    "g2_counts",
    "path_graph",
    "cycle_graph",
    "layered_adjacency",
    "layer_sizes",
    "generate",
    "FAMILIES",
]


# ------------------------------------------------------------------------------------
# layered triangulation core
# ------------------------------------------------------------------------------------


class _Builder:
    """Accumulates ccw bounded faces and per-vertex degrees for a growing disk."""

    def __init__(self):
        self.faces: list = []
        self.deg: list = []
        self.layer: list = []

    def new_vertices(self, count: int, layer: int) -> list:
        start = len(self.deg)
        self.deg.extend([0] * count)
        self.layer.extend([layer] * count)
        return list(range(start, start + count))

    def grow(self, cycle: list, demand, layers: int, first_layer: int) -> list:
        """Add ``layers`` rings of triangles outside the ccw boundary walk ``cycle``.

        A boundary vertex ``u`` (one entry per occurrence on the walk) receives a
        run of new outer neighbors sized so that its degree reaches
        ``demand(u)``; consecutive runs share their end vertex. Each run of
        ``k + 1`` vertices adds ``k`` triangles at ``u`` plus one triangle
        bridging to the next boundary vertex.
        """
        deg = self.deg
        for step in range(layers):
            occ = Counter(cycle)
            seen: dict = defaultdict(int)
            ks = []
            for u in cycle:
                c = occ[u]
                total = max(demand(u) - deg[u], 2 * c)
                base, rem = divmod(total, c)
                i = seen[u]
                seen[u] += 1
                ks.append(base + (1 if i < rem else 0) - 1)
            total_new = sum(ks)
            new = self.new_vertices(total_new, first_layer + step)
            m = len(cycle)
            s = 0
            for i, u in enumerate(cycle):
                k = ks[i]
                run = [new[(s + j) % total_new] for j in range(k + 1)]
                for j in range(k):
                    self.faces.append((u, run[j], run[j + 1]))
                self.faces.append((u, run[-1], cycle[(i + 1) % m]))
                deg[u] += k + 1
                for w in run:
                    deg[w] += 1
                s += k
            for w in new:
                deg[w] += 2
            cycle = new
        return cycle

    def finish(self, outer_cycle: list, **kwargs) -> PlanarMap:
        walks = [f[::-1] for f in self.faces]
        walks.append(tuple(outer_cycle))
        nv = len(self.deg)
        interior = np.ones(nv, bool)
        interior[list(set(outer_cycle))] = False
        return from_face_walks(walks, len(walks) - 1, n_vertices=nv, interior=interior, **kwargs)


def _wheel(builder: _Builder, k: int):
    (c,) = builder.new_vertices(1, 0)
    ring = builder.new_vertices(k, 1)
    for i in range(k):
        builder.faces.append((c, ring[i], ring[(i + 1) % k]))
    builder.deg[c] = k
    for w in ring:
        builder.deg[w] = 3
    return c, ring


def triangulation_deg_k(k: int, radius: int) -> PlanarMap:
    """Combinatorial ball of radius ``radius`` in the {3, k} tessellation (k >= 6).

    Vertices are numbered ring by ring from the center 0; ring ``radius`` is
    the frontier. Every interior vertex has degree exactly ``k``.
    """
    if k < 6 or radius < 1:
        raise ValueError("need k >= 6 and radius >= 1")
    b = _Builder()
    c, ring = _wheel(b, k)
    outer = b.grow(ring, lambda u: k, radius - 1, 2)
    groups = {f"layer_{r}": [v for v, lv in enumerate(b.layer) if lv == r] for r in range(radius + 1)}
    return b.finish(
        outer,
        labels={c: "center"},
        groups=groups,
        family={"family": "triangulation_deg_k", "params": {"k": k, "radius": radius}},
    )


# ------------------------------------------------------------------------------------
# adjacency-only layered ball for very large radii
# ------------------------------------------------------------------------------------


def layer_sizes(k: int, radius: int) -> list:
    """Ring sizes of the {3, k} ball (ring 0 is the center)."""
    sizes = [1, k]
    shared, plain = 0, k
    for _ in range(radius - 1):
        m = shared + plain
        total = shared * (k - 5) + plain * (k - 4)
        shared, plain = m, total - m
        sizes.append(total)
    return sizes[: radius + 1]


@njit
def _layered_adjacency_kernel(k, radius, sizes, adj, deg):
    starts = np.zeros(radius + 2, np.int64)
    for r in range(radius + 1):
        starts[r + 1] = starts[r] + sizes[r]
    # wheel
    for i in range(k):
        w = 1 + i
        adj[0, deg[0]] = w
        deg[0] += 1
        adj[w, deg[w]] = 0
        deg[w] += 1
    for i in range(k):
        a = 1 + i
        b = 1 + (i + 1) % k
        adj[a, deg[a]] = b
        deg[a] += 1
        adj[b, deg[b]] = a
        deg[b] += 1
    for r in range(1, radius):
        m = sizes[r]
        base = starts[r]
        nbase = starts[r + 1]
        total = sizes[r + 1]
        s = 0
        for i in range(m):
            u = base + i
            kk = k - deg[u] - 1
            if kk < 1:
                kk = 1
            for j in range(kk + 1):
                w = nbase + (s + j) % total
                adj[u, deg[u]] = w
                deg[u] += 1
                adj[w, deg[w]] = u
                deg[w] += 1
            s += kk
        for j in range(total):
            a = nbase + j
            b = nbase + (j + 1) % total
            adj[a, deg[a]] = b
            deg[a] += 1
            adj[b, deg[b]] = a
            deg[b] += 1
    return starts


def layered_adjacency(k: int, radius: int):
    """Fixed-width int32 adjacency of the {3, k} ball, without faces.

    Same vertex numbering as :func:`triangulation_deg_k`; memory is
    ``4 * k`` bytes per vertex, so radius 16 for k = 7 fits in under 1 GB.
    Returns ``(adj, deg, ring_starts)``.
    """
    sizes = np.asarray(layer_sizes(k, radius), np.int64)
    n = int(sizes.sum())
    width = max(k, 4)
    adj = np.full((n, width), -1, np.int32)
    deg = np.zeros(n, np.int32)
    starts = _layered_adjacency_kernel(k, radius, sizes, adj, deg)
    return adj, deg, starts


# ------------------------------------------------------------------------------------
# square lattice, paths, cycles
# ------------------------------------------------------------------------------------


def square_lattice(n: int, m: int | None = None, whole: bool = False, diagonals: bool = False) -> PlanarMap:
    """``n`` x ``m`` block of the square lattice; vertex (i, j) has id ``i * m + j``.

    By default the block is a truncation whose outer ring is the frontier;
    ``whole=True`` treats the block as a finite graph in its own right (all
    vertices interior). ``diagonals`` adds the (i, j)-(i+1, j+1) diagonal in
    every cell, giving a triangulated block.
    """
    m = n if m is None else m
    pos = [(float(j), float(i)) for i in range(n) for j in range(m)]
    edges = []
    for i in range(n):
        for j in range(m):
            v = i * m + j
            if j + 1 < m:
                edges.append((v, v + 1))
            if i + 1 < n:
                edges.append((v, v + m))
            if diagonals and i + 1 < n and j + 1 < m:
                edges.append((v, v + m + 1))
    fam = {"family": "square_lattice", "params": {"n": n, "m": m, "whole": whole, "diagonals": diagonals}}
    mp = from_positions(pos, edges, family=fam)
    return mp if whole else mp.with_interior(~mp.on_outer)


def path_graph(n: int) -> PlanarMap:
    pos = [(float(i), 0.0) for i in range(n)]
    return from_positions(pos, [(i, i + 1) for i in range(n - 1)], family={"family": "path", "params": {"n": n}})


def cycle_graph(n: int) -> PlanarMap:
    ang = 2 * np.pi * np.arange(n) / n
    pos = np.stack([np.cos(ang), np.sin(ang)], axis=1)
    return from_positions(pos, [(i, (i + 1) % n) for i in range(n)], family={"family": "cycle", "params": {"n": n}})


# ------------------------------------------------------------------------------------
# Lambda attachment
# ------------------------------------------------------------------------------------

# Lambda: attach vertex a, internal p1..p4; a~p1,p2,p3; p4~p1,p2,p3; path p1-p2-p3.
# Inside a ccw triangle (a, x, y) with p1 toward x and p3 toward y the ccw faces are:
LAMBDA_FACES = ((0, 1, 2), (0, 2, 3), (1, 4, 2), (2, 4, 3))
LAMBDA_EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (4, 1), (4, 2), (4, 3))


def lambda_attachment(schedule=(8, 9, 10), count: int | None = None, radius: int = 4) -> PlanarMap:
    """Triangulation with designated vertices v_k of degree n_k = schedule[k-1],
    with a copy of Lambda attached at v_k inside every face around v_k.

    v_1 is the center; v_2, v_3, ... sit on ring 2 at evenly spaced positions.
    Every other interior vertex has degree 7. ``count`` limits how many v_k
    actually receive attachments (the base is the same for every count).
    Group ``S_k`` is v_k together with its 4 n_k Lambda vertices.
    """
    schedule = [int(x) for x in schedule]
    count = len(schedule) if count is None else int(count)
    if any(x < 7 for x in schedule):
        raise ValueError("attachment degrees must be at least 7")
    if radius < 3 or count > len(schedule):
        raise ScheduleTooLargeForRadius("need radius >= 3 and count <= len(schedule)")
    b = _Builder()
    c, ring1 = _wheel(b, schedule[0])
    designated = {c: 1}
    demand_map: dict = {}
    ring1_out = b.grow(ring1, lambda u: 7, 1, 2)
    extra = schedule[1:]
    if extra:
        m2 = len(ring1_out)
        step = m2 // len(extra)
        if step < 3:
            raise ScheduleTooLargeForRadius("ring 2 too small to space the designated vertices")
        for j, nk in enumerate(extra):
            v = ring1_out[j * step]
            designated[v] = j + 2
            demand_map[v] = nk
    outer = b.grow(ring1_out, lambda u: demand_map.get(u, 7), radius - 2, 3)
    by_k = {kk: v for v, kk in designated.items()}

    faces = b.faces
    labels = {}
    groups = {}
    nv = len(b.deg)
    new_faces = []
    attach_at = {by_k[kk]: kk for kk in range(1, count + 1)}
    for f in faces:
        hits = [u for u in f if u in attach_at]
        if len(hits) > 1:
            raise ScheduleTooLargeForRadius("designated vertices share a face")
        if not hits:
            new_faces.append(f)
            continue
        v = hits[0]
        i = f.index(v)
        a, x, y = f[i], f[(i + 1) % 3], f[(i + 2) % 3]
        ids = [a, nv, nv + 1, nv + 2, nv + 3]
        kk = attach_at[v]
        copy_no = sum(1 for key in labels if labels[key].startswith(f"lam_{kk}_")) // 4
        for j in range(1, 5):
            labels[ids[j]] = f"lam_{kk}_{copy_no}_{j}"
        nv += 4
        for lf in LAMBDA_FACES:
            new_faces.append(tuple(ids[t] for t in lf))
        new_faces.append((x, y, a, ids[3], ids[4], ids[1], a))
    for v, kk in designated.items():
        labels[v] = f"v_{kk}"
    for kk in range(1, count + 1):
        v = by_k[kk]
        groups[f"S_{kk}"] = [v] + sorted(u for u, s in labels.items() if s.startswith(f"lam_{kk}_"))
    walks = [f[::-1] for f in new_faces] + [tuple(outer)]
    interior = np.ones(nv, bool)
    interior[list(set(outer))] = False
    fam = {
        "family": "lambda_attachment",
        "params": {"schedule": schedule, "count": count, "radius": radius},
        "lambda": {"vertices": 5, "edges": [list(e) for e in LAMBDA_EDGES], "attach_degree": 3},
    }
    return from_face_walks(walks, len(walks) - 1, n_vertices=nv, interior=interior, labels=labels, groups=groups, family=fam)


# ------------------------------------------------------------------------------------
# non-normal chain
# ------------------------------------------------------------------------------------


def nonnormal_chain(n_range=(-3, 3), depth: int = 2) -> PlanarMap:
    """The chain of blocks S_n, n in [lo, hi], completed by ``depth`` rings of triangles.

    S_n is the quadrilateral o_n, b_1^n, o_{n+1}, b_2^n with the pairs
    (v_{2k-1}^n, v_{2k}^n) stacked inside, each pair joined to both o's and to
    each other. The completion gives o_n degree 14|n| + 14, b vertices and all
    added interior vertices degree 7; its faces are triangles, so every face has
    degree at most 4. Labels: ``o_n``, ``b_j^n``, ``v_k^n``; groups ``S_n``.
    """
    lo, hi = int(n_range[0]), int(n_range[1])
    if lo > hi:
        raise ValueError("empty range")
    b = _Builder()
    labels = {}
    pos = {}
    o = {}
    for n in range(lo, hi + 2):
        (o[n],) = b.new_vertices(1, 0)
        labels[o[n]] = f"o_{n}"
    blocks = {}
    groups = {}
    for n in range(lo, hi + 1):
        b1, b2 = b.new_vertices(2, 0)
        labels[b1] = f"b_1^{n}"
        labels[b2] = f"b_2^{n}"
        vs = b.new_vertices(2 * abs(n), 0)
        for k, v in enumerate(vs, 1):
            labels[v] = f"v_{k}^{n}"
        blocks[n] = (b1, b2, vs)
        groups[f"S_{n}"] = sorted([o[n], o[n + 1], b1, b2] + vs)
        spokes = [b2] + vs + [b1]
        left, right = o[n], o[n + 1]
        for i in range(len(spokes) - 1):
            up, low = spokes[i], spokes[i + 1]
            k = i  # spokes[i] is v_i for 1 <= i <= 2|n|
            if 1 <= k <= 2 * abs(n) and k % 2 == 1:
                b.faces.append((left, low, up))
                b.faces.append((right, up, low))
            else:
                b.faces.append((left, low, o[n + 1], up))
        # degrees inside the chain
        for v in spokes:
            b.deg[v] += 2
        for v in vs:
            b.deg[v] += 1
        b.deg[left] += len(spokes)
        b.deg[right] += len(spokes)
    bottom = []
    for n in range(lo, hi + 1):
        bottom += [o[n], blocks[n][0]]
    top = [o[hi + 1]]
    for n in range(hi, lo - 1, -1):
        top += [blocks[n][1]] + ([o[n]] if n > lo else [])
    cycle = bottom + top
    o_inv = {v: n for n, v in o.items()}

    def demand(u):
        if u in o_inv:
            return 14 * abs(o_inv[u]) + 14
        return 7

    outer = b.grow(cycle, demand, depth, 1)
    fam = {"family": "nonnormal_chain", "params": {"n_range": [lo, hi], "depth": depth}}
    return b.finish(outer, labels=labels, groups=groups, family=fam)


# ------------------------------------------------------------------------------------
# G1: multiplied edges with a crossing line
# ------------------------------------------------------------------------------------


def g1_multiedge(radius: int = 8, schedule=(1, 2, 3), edges=None, spacing: int = 10) -> PlanarMap:
    """Deg-7 ball with edge e_n = [a_n, b_n] replaced by n strands crossed by a
    line from c_n to d_n (the apexes of the two triangles on e_n).

    Each crossing is a vertex m_n_i, so the result is simple; the witness block
    S_n = {a_n, b_n, c_n, d_n, m_n_1..m_n_n} has 2n + 2 faces and 4 surrounding
    edges. Edges are chosen greedily among interior edges two rings inside the
    frontier unless given explicitly as vertex pairs.
    """
    base = triangulation_deg_k(7, radius)
    schedule = [int(x) for x in schedule]
    ring = np.zeros(base.n_vertices, np.int64)
    for key, vs in base.groups.items():
        ring[list(vs)] = int(key.split("_")[1])
    if edges is None:
        chosen = []
        dists = []
        cand = []
        for e in range(base.n_edges):
            a, bb = base.edge_endpoints(e)
            if ring[a] == radius - 2 and ring[bb] == radius - 2:
                cand.append((a, bb))
        for a, bb in cand:
            if len(chosen) == len(schedule):
                break
            if all(d[a] >= spacing for d in dists):
                chosen.append((a, bb))
                dists.append(base.distances_from(a))
        if len(chosen) < len(schedule):
            raise SpacingViolated(f"only {len(chosen)} edges fit with spacing {spacing} at radius {radius}")
        edges = chosen
    edges = [tuple(int(x) for x in e) for e in edges]
    if len(edges) != len(schedule):
        raise ValueError("one edge per schedule entry")
    for i in range(len(edges)):
        d = base.distances_from(edges[i][0])
        for j in range(len(edges)):
            if i != j and d[edges[j][0]] < spacing:
                raise SpacingViolated(f"dist(a_{schedule[i]}, a_{schedule[j]}) = {d[edges[j][0]]} < {spacing}")
    # ccw bounded faces of the base
    faces = []
    for f in base.bounded_faces:
        faces.append(tuple(reversed(base.face_walk(f))))
    index = {}
    for fi, f in enumerate(faces):
        for i in range(3):
            index[(f[i], f[(i + 1) % 3])] = fi
    nv = base.n_vertices
    labels = dict(base.labels)
    groups = {}
    drop = set()
    added = []
    for n, (a, bb) in zip(schedule, edges):
        if not (base.interior[a] and base.interior[bb]):
            raise SpacingViolated("chosen edge touches the frontier")
        f1 = index[(a, bb)]
        f2 = index[(bb, a)]
        c = [v for v in faces[f1] if v not in (a, bb)][0]
        d = [v for v in faces[f2] if v not in (a, bb)][0]
        if not (base.interior[c] and base.interior[d]):
            raise SpacingViolated("apex of a chosen edge lies on the frontier")
        drop.update((f1, f2))
        mids = list(range(nv, nv + n))
        nv += n
        for v, s in ((a, "a"), (bb, "b"), (c, "c"), (d, "d")):
            labels[v] = f"{s}_{n}"
        for i, mv in enumerate(mids, 1):
            labels[mv] = f"m_{n}_{i}"
        added += [(a, mids[0], c), (bb, c, mids[0]), (a, d, mids[-1]), (bb, mids[-1], d)]
        for i in range(n - 1):
            added += [(a, mids[i + 1], mids[i]), (bb, mids[i], mids[i + 1])]
        groups[f"S_{n}"] = sorted([a, bb, c, d] + mids)
    new_faces = [f for i, f in enumerate(faces) if i not in drop] + added
    outer = base.face_walk(base.outer_face)
    walks = [f[::-1] for f in new_faces] + [outer]
    interior = np.ones(nv, bool)
    interior[: base.n_vertices] = base.interior
    fam = {
        "family": "g1_multiedge",
        "params": {"radius": radius, "schedule": schedule, "edges": [list(e) for e in edges], "spacing": spacing},
    }
    return from_face_walks(walks, len(walks) - 1, n_vertices=nv, interior=interior, labels=labels, groups=groups, family=fam)


# ------------------------------------------------------------------------------------
# G2: square lattice with multiplied edges and half-integer lines
# ------------------------------------------------------------------------------------


def g2_counts(ells) -> list:
    """C_n = number of G2 vertices with |x| + |y| < n + 1/10, for n = 1..len(ells).

    Lattice points: 2n^2 + 2n + 1; crossing points of the half-integer lines:
    2n(n + 1); strand midpoints: sum_{j<=n} l_j |E_j| with |E_j| = 8j - 4.
    """
    out = []
    strands = 0
    for n in range(1, len(ells) + 1):
        strands += ells[n - 1] * (8 * n - 4)
        out.append(2 * n * n + 2 * n + 1 + 2 * n * (n + 1) + strands)
    return out


def _g2_ells(N: int, rule):
    if rule == "auto" or rule is None:
        ells = [1]
        while len(ells) < N:
            ells.append(g2_counts(ells)[-1])
        return ells, True
    ells = [int(x) for x in rule][:N]
    if len(ells) < N:
        raise ValueError(f"need {N} multiplicities")
    return ells, False


def g2_multiedge_lattice(N: int, ell_rule="auto") -> PlanarMap:
    """Truncation of G2 to lattice radius N.

    Kept: lattice points with |x| + |y| <= N, all l_j strands of every lattice
    edge in E_1..E_N (each strand split at its crossing with the half-integer
    line), the line pieces joining consecutive crossings inside one bundle, and
    the line intersections (k1 + 1/2, k2 + 1/2) whose four surrounding edges are
    present. ``ell_rule`` is ``"auto"`` (l_1 = 1, l_{n+1} = C_n) or an explicit
    list; ``family["rule_ok"]`` records whether l_{n+1} >= C_n holds throughout.
    """
    if N < 1:
        raise ValueError("N >= 1")
    ells, auto = _g2_ells(N, ell_rule)
    C = g2_counts(ells)
    rule_ok = all(ells[n] >= C[n - 1] for n in range(1, N))
    pos: list = []
    labels: dict = {}
    lat = {}
    for x in range(-N, N + 1):
        for y in range(-N, N + 1):
            if abs(x) + abs(y) <= N:
                lat[(x, y)] = len(pos)
                labels[len(pos)] = f"P({x},{y})"
                pos.append((float(x), float(y)))
    edges = []
    bundles = {}  # (p, q) sorted lattice pair -> list of mid ids ordered by offset
    for (x, y), p in lat.items():
        for dx, dy in ((1, 0), (0, 1)):
            q = (x + dx, y + dy)
            if q not in lat:
                continue
            shell = max(abs(x) + abs(y), abs(q[0]) + abs(q[1]))
            ell = ells[shell - 1]
            mids = []
            for i in range(ell):
                s = -0.35 + 0.7 * (i + 0.5) / ell
                mid = len(pos)
                if dx:
                    pos.append((x + 0.5, y + s))
                    labels[mid] = f"M({x + 0.5},{y}):{i}"
                else:
                    pos.append((x + s, y + 0.5))
                    labels[mid] = f"M({x},{y + 0.5}):{i}"
                mids.append(mid)
                edges.append((p, mid))
                edges.append((mid, lat[q]))
            for i in range(ell - 1):
                edges.append((mids[i], mids[i + 1]))
            bundles[((x, y), q)] = mids
    for k1 in range(-N, N):
        for k2 in range(-N, N):
            cx, cy = k1 + 0.5, k2 + 0.5
            if abs(cx) + abs(cy) > N - 1:
                continue
            below = bundles.get(((k1, k2), (k1 + 1, k2)))
            above = bundles.get(((k1, k2 + 1), (k1 + 1, k2 + 1)))
            left = bundles.get(((k1, k2), (k1, k2 + 1)))
            right = bundles.get(((k1 + 1, k2), (k1 + 1, k2 + 1)))
            if not (below and above and left and right):
                continue
            xid = len(pos)
            pos.append((cx, cy))
            labels[xid] = f"X({cx},{cy})"
            edges += [(xid, below[-1]), (xid, above[0]), (xid, left[-1]), (xid, right[0])]
    fam = {
        "family": "g2_multiedge_lattice",
        "params": {"N": N, "ell_rule": "auto" if auto else list(ells)},
        "ells": ells,
        "C": C,
        "rule_ok": rule_ok,
    }
    mp = from_positions(pos, edges, labels=labels, family=fam)
    return mp.with_interior(~mp.on_outer)


# ------------------------------------------------------------------------------------
# dispatch
# ------------------------------------------------------------------------------------

FAMILIES = {
    "triangulation_deg_k": triangulation_deg_k,
    "square_lattice": square_lattice,
    "lambda_attachment": lambda_attachment,
    "nonnormal_chain": nonnormal_chain,
    "g1_multiedge": g1_multiedge,
    "g2_multiedge_lattice": g2_multiedge_lattice,
    "path": path_graph,
    "cycle": cycle_graph,
}


def generate(family: str, **params) -> PlanarMap:
    try:
        fn = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None
    return fn(**params)


def _fraction_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"
