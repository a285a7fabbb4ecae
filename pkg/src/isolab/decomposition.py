"""Leaves, branches and the tree-guided partition of simply connected subgraphs.

A leaf of S is a maximal polygon inside S; a branch is a maximal tree in S
that uses no edge of a face in F(S). :func:`partition` contracts every leaf
to a node, splits the resulting tree at its vertices of degree >= 3 into
paths, and turns each path back into a piece of S. Every certificate is
recomputed from scratch, never assumed.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import HypothesisFailed, NotSimplyConnected
from .subgraphs import SubgraphView, classify_face_graph, is_simply_connected

__all__ = [
    "Part",
    "Partition",
    "ContractionTree",
    "find_parts",
    "contract",
    "partition",
    "greedy_partition",
    "certify_conclusion",
]


@dataclass(frozen=True)
class Part:
    kind: str  # "leaf" | "branch"
    vertices: frozenset
    edges: frozenset
    attachment: int | None = None

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "vertices": sorted(self.vertices),
            "edges": sorted(self.edges),
            "attachment": self.attachment,
        }


@dataclass
class ContractionTree:
    nodes: list  # ("L", i) for leaf i, ("v", v) for a vertex of S
    tags: dict  # node -> "V1" | "V2" | "V3"
    edges: list  # pairs of nodes
    leaves: list  # leaf Parts, index i matches ("L", i)
    attach_sets: dict  # i -> V^i
    branch_nodes: list  # A: nodes of degree >= 3
    degree_one: list  # B: nodes of degree 1
    paths: list  # ordered list of (node list, edge list)
    is_tree: bool

    @property
    def m(self) -> int:
        return len(self.paths)


@dataclass
class Partition:
    pieces: list  # list of Part-like pieces (kind "piece" or leaf/branch)
    tau: Fraction
    conditions: dict = field(default_factory=dict)
    construction: str = "tree"
    prefix_records: list = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.pieces)

    def as_dict(self) -> dict:
        return {
            "construction": self.construction,
            "tau": f"{self.tau.numerator}/{self.tau.denominator}",
            "n": self.n,
            "parts": [p.as_dict() for p in self.pieces],
            "conditions": self.conditions,
            "prefix": self.prefix_records,
        }


# --------------------------------------------------------------------------------
# helpers
# --------------------------------------------------------------------------------


def _edge_ends(host, e):
    return host.edge_endpoints(e)


def _induced_edges(host, vertices) -> frozenset:
    return frozenset(SubgraphView(host, vertices).edges)


def _dv(host, vertices) -> set:
    return set(SubgraphView(host, vertices).vertex_boundary())


def _face_edge_components(S: SubgraphView) -> list:
    """Components of F(S) under sharing an edge."""
    h = S.host
    fset = set(S.faces)
    seen = set()
    comps = []
    for f0 in sorted(fset):
        if f0 in seen:
            continue
        comp = []
        seen.add(f0)
        stack = [f0]
        while stack:
            f = stack.pop()
            comp.append(f)
            for d in h.face_cycle(f):
                g = int(h.face_of_dart[h.twin[d]])
                if g in fset and g not in seen:
                    seen.add(g)
                    stack.append(g)
        comps.append(sorted(comp))
    return comps


def _grow_leaves(S: SubgraphView, comp: list) -> list:
    """Split a face component whose vertex hull is not a polygon into maximal polygons."""
    h = S.host
    remaining = list(comp)
    leaves = []
    while remaining:
        chosen = [remaining[0]]
        verts = set(h.face_walk(remaining[0]))
        grown = True
        while grown:
            grown = False
            for f in remaining:
                if f in chosen:
                    continue
                if not any(int(h.face_of_dart[h.twin[d]]) in chosen for d in h.face_cycle(f)):
                    continue
                trial = verts | set(h.face_walk(f))
                if classify_face_graph(SubgraphView(h, trial)).polygon:
                    chosen.append(f)
                    verts = trial
                    grown = True
        leaves.append(frozenset(verts))
        remaining = [f for f in remaining if f not in chosen]
    return leaves


def _leaves_and_branches(S: SubgraphView):
    h = S.host
    leaves = []
    for comp in _face_edge_components(S):
        verts = set()
        for f in comp:
            verts.update(h.face_walk(f))
        if classify_face_graph(SubgraphView(h, verts)).polygon:
            leaves.append(frozenset(verts))
        else:
            leaves.extend(_grow_leaves(S, comp))
    leaf_parts = [Part("leaf", v, _induced_edges(h, v)) for v in leaves]
    face_edges = set()
    for f in S.faces:
        face_edges.update(int(h.edge_of_dart[d]) for d in h.face_cycle(f))
    free = [e for e in S.edges if e not in face_edges]
    # components of the free-edge forest
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in free:
        a, b = _edge_ends(h, e)
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    groups = defaultdict(set)
    for e in free:
        a, _ = _edge_ends(h, e)
        groups[find(a)].add(e)
    branch_parts = []
    for es in groups.values():
        vs = set()
        for e in es:
            vs.update(_edge_ends(h, e))
        branch_parts.append(Part("branch", frozenset(vs), frozenset(es)))
    # isolated vertices of S that touch neither a face nor a free edge (only when S is one vertex)
    covered = set().union(*(p.vertices for p in leaf_parts + branch_parts)) if (leaf_parts or branch_parts) else set()
    for v in sorted(S.vertices - covered):
        branch_parts.append(Part("branch", frozenset([v]), frozenset()))
    leaf_parts.sort(key=lambda p: min(p.vertices))
    branch_parts.sort(key=lambda p: (min(p.vertices), len(p.vertices)))
    return leaf_parts, branch_parts


def _require_sc(S: SubgraphView):
    if not is_simply_connected(S):
        raise NotSimplyConnected(f"{S!r} is not simply connected")


# --------------------------------------------------------------------------------
# parts
# --------------------------------------------------------------------------------


def find_parts(S: SubgraphView) -> list:
    """Parts of S in greedy order.

    The first part contains the edge with the smallest dart; afterwards the
    next part contains the smallest dart leaving the accumulated union. Each
    part records its attachment vertex (the single vertex it shares with the
    union of the earlier parts).
    """
    _require_sc(S)
    h = S.host
    leaves, branches = _leaves_and_branches(S)
    parts = leaves + branches
    if not S.edges:
        return [Part("branch", S.vertices, frozenset(), None)]
    owner = {}
    for i, p in enumerate(parts):
        for e in p.edges:
            owner.setdefault(e, i)
    e1 = min(S.edges, key=lambda e: int(h.edge_dart[e]))
    order = [owner[e1]]
    union_v = set(parts[owner[e1]].vertices)
    union_e = set(parts[owner[e1]].edges)
    out = [Part(parts[order[0]].kind, parts[order[0]].vertices, parts[order[0]].edges, None)]
    darts = sorted(d for v in S.vertices for d in h.rotation(v) if int(h.target[d]) in S.vertices)
    while len(order) < len(parts):
        nxt = None
        for d in darts:
            e = int(h.edge_of_dart[d])
            if e in union_e:
                continue
            if int(h.origin[d]) in union_v and int(h.target[d]) not in union_v:
                nxt = owner[e]
                break
        if nxt is None:
            # no edge leaves the union with exactly one end in it: take the next part touching it
            cands = [i for i in range(len(parts)) if i not in order and parts[i].vertices & union_v]
            if not cands:
                break
            nxt = cands[0]
        shared = parts[nxt].vertices & union_v
        att = min(shared) if len(shared) == 1 else None
        out.append(Part(parts[nxt].kind, parts[nxt].vertices, parts[nxt].edges, att))
        order.append(nxt)
        union_v |= parts[nxt].vertices
        union_e |= parts[nxt].edges
    return out


# --------------------------------------------------------------------------------
# contraction tree
# --------------------------------------------------------------------------------


def contract(S: SubgraphView) -> ContractionTree:
    """Tree obtained by shrinking every leaf to a node joined to the vertices
    of that leaf which carry an edge of S outside the leaf.

    Node tags: V1 leaf nodes, V2 vertices outside all leaves, V3 attachment
    vertices. Edges between two V2/V3 vertices are the edges of S that lie in
    no leaf; a leaf node is joined to every V3 vertex it contains.
    """
    _require_sc(S)
    h = S.host
    leaves, _ = _leaves_and_branches(S)
    leaf_vertices = set().union(*(L.vertices for L in leaves)) if leaves else set()
    leaf_edges = set().union(*(L.edges for L in leaves)) if leaves else set()
    attach = {}
    for i, L in enumerate(leaves):
        dvl = _dv(h, L.vertices)
        vi = set()
        for v in dvl:
            for d in h.rotation(v):
                e = int(h.edge_of_dart[d])
                if e in S.edges and e not in L.edges:
                    vi.add(v)
                    break
        attach[i] = frozenset(vi)
    v3 = set().union(*attach.values()) if attach else set()
    v2 = set(S.vertices) - leaf_vertices
    nodes = [("L", i) for i in range(len(leaves))] + [("v", v) for v in sorted(v2 | v3)]
    tags = {("L", i): "V1" for i in range(len(leaves))}
    for v in v2:
        tags[("v", v)] = "V2"
    for v in v3:
        tags[("v", v)] = "V3"
    edges = []
    for e in sorted(S.edges):
        if e in leaf_edges:
            continue
        a, b = _edge_ends(h, e)
        if a in v2 | v3 and b in v2 | v3:
            edges.append((("v", min(a, b)), ("v", max(a, b))))
    for i, L in enumerate(leaves):
        for w in sorted(v3 & L.vertices):
            edges.append((("L", i), ("v", w)))
    adj = defaultdict(list)
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    # tree test
    is_tree = len(edges) == len(nodes) - 1 and _connected(nodes, adj)
    A = [x for x in nodes if len(adj[x]) >= 3]
    B = [x for x in nodes if len(adj[x]) == 1]
    paths = _split_paths(nodes, edges, set(A))
    return ContractionTree(nodes, tags, edges, leaves, attach, A, B, paths, is_tree)


def _connected(nodes, adj) -> bool:
    if not nodes:
        return False
    seen = {nodes[0]}
    dq = deque([nodes[0]])
    while dq:
        x = dq.popleft()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                dq.append(y)
    return len(seen) == len(nodes)


def _split_paths(nodes, edges, A: set) -> list:
    """Closures of the components of T minus A, ordered so each meets the
    union of the earlier ones in exactly one node."""
    if not edges:
        return [([nodes[0]], [])] if nodes else []
    parent = list(range(len(edges)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    at = defaultdict(list)
    for i, (a, b) in enumerate(edges):
        for x in (a, b):
            if x not in A:
                at[x].append(i)
    for ids in at.values():
        for i in ids[1:]:
            ra, rb = find(ids[0]), find(i)
            if ra != rb:
                parent[ra] = rb
    groups = defaultdict(list)
    for i in range(len(edges)):
        groups[find(i)].append(i)
    raw = []
    for ids in groups.values():
        es = [edges[i] for i in ids]
        ns = sorted({x for e in es for x in e}, key=_node_key)
        raw.append((ns, es))
    raw.sort(key=lambda p: [_node_key(x) for x in p[0]])
    ordered = [raw.pop(0)]
    covered = set(ordered[0][0])
    while raw:
        for i, (ns, es) in enumerate(raw):
            if covered & set(ns):
                ordered.append(raw.pop(i))
                covered |= set(ns)
                break
        else:
            ordered.append(raw.pop(0))
            covered |= set(ordered[-1][0])
    return ordered


def _node_key(x):
    return (0 if x[0] == "L" else 1, x[1])


# --------------------------------------------------------------------------------
# partitions
# --------------------------------------------------------------------------------


def partition(S: SubgraphView, tree: ContractionTree | None = None) -> Partition:
    """Tree-guided partition of a simply connected S with tau = 2.

    Piece j holds the V2/V3 vertices of path T_j, the edges of S on T_j, and
    every leaf on T_j that no earlier path already used. Pieces that are a
    single vertex are dropped.
    """
    _require_sc(S)
    h = S.host
    tree = tree or contract(S)
    used_leaves = set()
    pieces = []
    for ns, es in tree.paths:
        verts = set()
        edges = set()
        for x in ns:
            if x[0] == "v":
                verts.add(x[1])
            elif x[1] not in used_leaves:
                used_leaves.add(x[1])
                L = tree.leaves[x[1]]
                verts |= L.vertices
                edges |= L.edges
        for a, b in es:
            if a[0] == "v" and b[0] == "v":
                edges.add(_edge_between(h, a[1], b[1], S))
        if len(verts) <= 1 and not edges:
            continue
        pieces.append(Part("piece", frozenset(verts), frozenset(edges)))
    if not pieces:
        pieces = [Part("piece", S.vertices, frozenset(S.edges))]
    P = Partition(pieces, Fraction(2), construction="tree")
    _certify(S, P, tree)
    return P


def greedy_partition(S: SubgraphView) -> Partition:
    """Parts in greedy order, certified with tau = 3 (the normal-host count)."""
    parts = find_parts(S)
    P = Partition(parts, Fraction(3), construction="greedy")
    _certify(S, P, None)
    return P


def _edge_between(h, a, b, S):
    for d in h.rotation(a):
        if int(h.target[d]) == b:
            return int(h.edge_of_dart[d])
    raise ValueError(f"no edge between {a} and {b}")


def _certify(S: SubgraphView, P: Partition, tree: ContractionTree | None):
    h = S.host
    dvS = _dv(h, S.vertices)
    union_v: set = set()
    union_e: set = set()
    ok_induced = ok_shared = ok_growth = True
    records = []
    prev_dv = 0
    for i, p in enumerate(P.pieces):
        shared = union_v & p.vertices
        if i > 0 and len(shared) != 1:
            ok_shared = False
        union_v |= p.vertices
        union_e |= p.edges
        induced = union_e == set(_induced_edges(h, union_v))
        ok_induced &= induced
        cur_dv = len(_dv(h, union_v))
        piece_dv = len(_dv(h, p.vertices))
        # the prefix boundary grows by the piece boundary, minus at most 2 for the shared vertex
        growth = True if i == 0 else cur_dv >= prev_dv + piece_dv - 2
        ok_growth &= growth
        records.append(
            {
                "i": i + 1,
                "shared": sorted(shared),
                "induced": induced,
                "dv_prefix": cur_dv,
                "dv_piece": piece_dv,
                "v_piece": len(p.vertices),
                "dv_growth": growth,
            }
        )
        prev_dv = cur_dv
    union_ok = union_v == set(S.vertices) and union_e == set(S.edges)
    ok_count = len(dvS) * P.tau >= P.n
    cond = {
        "induced_prefixes": ok_induced,
        "single_shared_vertex": ok_shared,
        "piece_count": bool(ok_count),
        "dv_growth": ok_growth,
        "union": union_ok,
        "dv": len(dvS),
    }
    if tree is not None:
        cond["tree"] = tree.is_tree
        cond["B"] = len(tree.degree_one)
        cond["m"] = tree.m
        cond["B_le_dv"] = len(tree.degree_one) <= len(dvS)
        cond["m_le_2dv"] = tree.m <= 2 * len(dvS)
        cond["shape"] = all(_chain_shape(SubgraphView(h, p.vertices)) for p in P.pieces)
    P.conditions = cond
    P.prefix_records = records


def _chain_shape(T: SubgraphView) -> bool:
    """Every branch is a path and no vertex lies in three distinct parts."""
    if not is_simply_connected(T):
        return False
    leaves, branches = _leaves_and_branches(T)
    h = T.host
    for b in branches:
        deg = defaultdict(int)
        for e in b.edges:
            x, y = _edge_ends(h, e)
            deg[x] += 1
            deg[y] += 1
        if any(c > 2 for c in deg.values()):
            return False
    count = defaultdict(int)
    for p in leaves + branches:
        for v in p.vertices:
            count[v] += 1
    return all(c <= 2 for c in count.values())


@dataclass
class ConclusionRecord:
    n_vertices: int
    bound: Fraction
    holds: bool
    part_bounds: list
    dv_growth: list

    def as_dict(self) -> dict:
        return {
            "n_vertices": self.n_vertices,
            "bound": f"{self.bound.numerator}/{self.bound.denominator}",
            "holds": self.holds,
            "part_bounds": self.part_bounds,
            "dv_growth": self.dv_growth,
        }


def certify_conclusion(S: SubgraphView, P: Partition, C) -> ConclusionRecord:
    """Check |V(S_i)| <= C |d_v S_i| for each piece, then |V(S)| <= (1 + 2 tau) C |d_v S|."""
    C = Fraction(C)
    h = S.host
    parts = []
    for i, p in enumerate(P.pieces):
        dvp = len(_dv(h, p.vertices))
        if len(p.vertices) > C * dvp:
            raise HypothesisFailed(f"piece {i + 1}: |V| = {len(p.vertices)} > {C} * {dvp}")
        parts.append((len(p.vertices), dvp))
    bound = (1 + 2 * P.tau) * C * len(_dv(h, S.vertices))
    return ConclusionRecord(len(S.vertices), bound, len(S.vertices) <= bound, parts, [r["dv_growth"] for r in P.prefix_records])
