import math
from fractions import Fraction

import networkx as nx
import numpy as np
import pytest

from isolab.errors import (
    BallTouchesTruncationBoundary,
    CapExceeded,
    Disconnected,
    NoDetourExists,
    NotTriangulation,
    TooSmallT,
)
from isolab.generators import cycle_graph, g2_multiedge_lattice, path_graph, square_lattice, triangulation_deg_k
from isolab.hyperbolicity import (
    AdjacencyHost,
    DetourProbe,
    detour_growth,
    growth_bound_check,
    growth_threshold,
    layered_host,
    metric,
    thinness,
    triangle_thinness,
)

from conftest import to_nx


def _adjacency_host(g):
    n = g.number_of_nodes()
    nbr = [sorted(g.neighbors(v)) for v in range(n)]
    ptr = np.cumsum([0] + [len(x) for x in nbr])
    flat = np.array([w for x in nbr for w in x], np.int64)
    return AdjacencyHost(ptr.astype(np.int64), flat, np.ones(n, bool), {}, None)


def _brute_delta(m):
    """Max over geodesic triangles by enumerating every geodesic with networkx."""
    g = nx.Graph(to_nx(m))
    n = m.n_vertices
    D = dict(nx.all_pairs_shortest_path_length(g))
    # far[x][y][p] = max over geodesics x-y of the distance from p to the geodesic
    far = {}
    for x in range(n):
        for y in range(n):
            best = np.zeros(n, int)
            for path in nx.all_shortest_paths(g, x, y):
                d = np.array([min(D[p][q] for q in path) for p in range(n)])
                best = np.maximum(best, d)
            far[(x, y)] = best
    delta = 0
    for a in range(n):
        for b in range(n):
            inter = [p for p in range(n) if D[a][p] + D[p][b] == D[a][b]]
            for c in range(n):
                for p in inter:
                    delta = max(delta, min(far[(b, c)][p], far[(c, a)][p]))
    return delta


def test_path_distances():
    M = metric(path_graph(6))
    assert M.d(0, 5) == 5 and M.geodesic_count(0, 5) == 1
    assert thinness(path_graph(6)).delta == 0


def test_distances_match_matrix_powers(deg7_r2):
    g = to_nx(deg7_r2)
    A = nx.to_numpy_array(nx.Graph(g), nodelist=range(deg7_r2.n_vertices), dtype=np.int64) > 0
    M = metric(deg7_r2)
    n = deg7_r2.n_vertices
    reach = np.eye(n, dtype=bool)
    D = np.full((n, n), -1)
    k = 0
    D[reach] = 0
    while (D < 0).any():
        k += 1
        reach = reach | ((reach.astype(np.int64) @ A.astype(np.int64)) > 0)
        D[(D < 0) & reach] = k
    assert (M.distances == D).all()


def test_grid_corners_and_geodesic_count():
    m = square_lattice(5, whole=True)
    M = metric(m)
    assert M.d(0, 24) == 8
    assert M.geodesic_count(0, 24) == math.comb(8, 4)
    assert len(M.interval(0, 24)) == 25
    g = M.canonical_geodesic(0, 24)
    assert len(g) == 9 and all(M.d(x, y) == 1 for x, y in zip(g, g[1:]))


@pytest.mark.parametrize(
    "build",
    [lambda: cycle_graph(8), lambda: cycle_graph(9), lambda: square_lattice(4, whole=True), lambda: square_lattice(3, 5, whole=True)],
    ids=["C8", "C9", "grid4", "grid3x5"],
)
def test_thinness_matches_brute_force(build):
    m = build()
    rep = thinness(m)
    assert rep.delta == _brute_delta(m)
    assert rep.reevaluate(metric(m)) == rep.delta


def test_known_values():
    assert thinness(cycle_graph(8)).delta == 2
    assert thinness(square_lattice(6, whole=True)).delta == 5
    # geodesics in a tree are unique and triangles are tripods
    assert thinness(_adjacency_host(nx.balanced_tree(2, 4))).delta == 0


def test_deg7_small_delta(deg7_r2):
    rep = thinness(deg7_r2)
    assert 1 <= rep.delta <= 2
    assert triangle_thinness(metric(deg7_r2), rep.sides) == rep.delta


def test_sampled_never_exceeds_exhaustive(deg7_r2):
    full = thinness(deg7_r2).delta
    for seed in range(4):
        rep = thinness(deg7_r2, ("random", 12, seed))
        assert rep.delta <= full and len(rep.sample) == 12


def test_relabel_invariance(deg7_r2, rng):
    perm = rng.permutation(deg7_r2.n_darts)
    assert thinness(deg7_r2.relabel_darts(perm)).delta == thinness(deg7_r2).delta


def test_g2_block_grows():
    deltas = [thinness(g2_multiedge_lattice(N, [1] * N)).delta for N in (4, 5, 6)]
    assert deltas == [8, 10, 12]


def test_cap_guard(deg7_r3):
    with pytest.raises(CapExceeded):
        thinness(deg7_r3, cap=20)


def test_detour_matches_networkx():
    m = square_lattice(21)
    z = 10 * 21 + 10
    g = nx.Graph(to_nx(m))
    dz = nx.single_source_shortest_path_length(g, z)
    for pr in detour_growth(m, z, [2, 3, 4]):
        h = g.subgraph([v for v in g if dz[v] >= pr.t])
        assert pr.shortest_detour_length == nx.shortest_path_length(h, pr.a, pr.b)
        assert pr.d_ab == 2 * pr.t and dz[pr.a] == dz[pr.b] == pr.t


def test_detour_fixed_triple():
    m = square_lattice(15)
    a, b, z = 7 * 15 + 3, 7 * 15 + 11, 7 * 15 + 7
    (pr,) = detour_growth(m, (a, b, z), [2])
    assert pr.a == a and pr.b == b and pr.d_ab == 8
    with pytest.raises(ValueError):
        detour_growth(m, (a, b, 6 * 15 + 7), [2])


def test_detour_guards():
    m = square_lattice(9)
    with pytest.raises(BallTouchesTruncationBoundary):
        detour_growth(m, 40, [5])
    with pytest.raises(NoDetourExists):
        detour_growth(path_graph(9).with_interior(np.ones(9, bool)), 4, [2])
    (pr,) = detour_growth(path_graph(9).with_interior(np.ones(9, bool)), 4, [2], allow_missing=True)
    assert pr.shortest_detour_length is None


def test_growth_threshold_and_bound():
    j = Fraction(1, 10)
    assert growth_threshold(j, 12) == pytest.approx((1 / 20) * (11 / 10) ** 0.5)
    probe = DetourProbe(12, 0, 1, 1, 2, 24)
    rep = growth_bound_check(triangulation_deg_k(7, 2), j, [probe])
    assert rep.ok and rep.rows[0]["threshold"] == pytest.approx(growth_threshold(j, 12))
    # zero detour fails for positive j, but j = 0 always passes
    bad = DetourProbe(12, 0, 0, 1, 2, 24)
    assert not growth_bound_check(triangulation_deg_k(7, 2), j, [bad]).ok
    assert growth_bound_check(triangulation_deg_k(7, 2), 0, [bad]).ok
    with pytest.raises(TooSmallT):
        growth_bound_check(triangulation_deg_k(7, 2), j, [DetourProbe(11, 0, 5, 1, 2, 22)])
    with pytest.raises(NotTriangulation):
        growth_bound_check(square_lattice(5), j, [probe])


def test_layered_host_detours():
    host = layered_host(7, 8)
    assert host.n_vertices == triangulation_deg_k(7, 8).n_vertices
    probes = detour_growth(host, 0, [2, 3, 4])
    lens = [p.shortest_detour_length for p in probes]
    assert lens == [7, 19, 50]


def test_disconnected():
    g = nx.Graph([(0, 1), (2, 3)])
    with pytest.raises(Disconnected):
        metric(_adjacency_host(g))
