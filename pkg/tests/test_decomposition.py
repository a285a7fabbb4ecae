from fractions import Fraction

import networkx as nx
import pytest

from isolab.decomposition import certify_conclusion, contract, find_parts, greedy_partition, partition
from isolab._enum import G_SC, run_scan
from isolab.errors import HypothesisFailed, NotSimplyConnected
from isolab.generators import square_lattice, triangulation_deg_k
from isolab.subgraphs import SubgraphView, host_arrays

DIAG = square_lattice(6, diagonals=True)
SQ = square_lattice(7)

CONDS = ("induced_prefixes", "single_shared_vertex", "piece_count", "dv_growth", "union", "tree", "B_le_dv", "m_le_2dv", "shape")


def _parts(S):
    return [(p.kind, sorted(p.vertices)) for p in find_parts(S)]


def test_polygon_is_one_leaf():
    S = SubgraphView(DIAG, [7, 8, 13, 14])
    assert _parts(S) == [("leaf", [7, 8, 13, 14])]
    T = contract(S)
    assert T.nodes == [("L", 0)] and T.edges == []
    P = partition(S, T)
    assert P.n == 1 and all(P.conditions[k] for k in CONDS)
    rec = certify_conclusion(S, P, 1)
    assert rec.holds and rec.part_bounds == [(4, 4)]


def test_faceless_path_is_one_branch():
    S = SubgraphView(DIAG, [7, 8, 9, 10])
    assert _parts(S) == [("branch", [7, 8, 9, 10])]
    T = contract(S)
    assert set(T.tags.values()) == {"V2"} and len(T.degree_one) == 2


def test_two_triangles_with_bridge():
    S = SubgraphView(DIAG, [7, 13, 14, 15, 16, 22])
    assert _parts(S) == [("leaf", [7, 13, 14]), ("branch", [14, 15]), ("leaf", [15, 16, 22])]
    G = greedy_partition(S)
    assert [len(p.vertices) for p in G.pieces] == [3, 2, 3]
    assert [r["shared"] for r in G.prefix_records] == [[], [14], [15]]
    assert G.tau == 3 and all(G.conditions[k] for k in ("induced_prefixes", "single_shared_vertex", "piece_count", "dv_growth", "union"))


def test_two_leaves_at_cut_vertex():
    S = SubgraphView(DIAG, [7, 13, 14, 15, 21])
    T = contract(S)
    assert T.is_tree and T.tags[("v", 14)] == "V3"
    assert sorted(T.edges) == [(("L", 0), ("v", 14)), (("L", 1), ("v", 14))]
    G = greedy_partition(S)
    assert G.n == 2
    rec = certify_conclusion(S, G, 3)
    assert rec.n_vertices == 5 and rec.holds
    assert rec.bound == (1 + 2 * 3) * 3 * G.conditions["dv"]
    P = partition(S, T)
    assert P.tau == 2
    assert certify_conclusion(S, P, 3).bound == 5 * 3 * 5


def test_chain_of_polygons():
    S = SubgraphView(SQ, [8, 9, 15, 16, 17, 23, 24, 25, 31, 32])
    G = greedy_partition(S)
    assert G.n == 3
    assert [r["shared"] for r in G.prefix_records[1:]] == [[16], [24]]
    P = partition(S)
    assert all(P.conditions[k] for k in CONDS)


def test_star_tree_with_branch_node():
    # a polygon with three pendant paths: the leaf node has degree 3
    S = SubgraphView(SQ, [16, 17, 23, 24, 9, 18, 31])
    T = contract(S)
    assert T.is_tree and ("L", 0) in T.branch_nodes
    g = nx.Graph(T.edges)
    assert nx.is_tree(g)
    P = partition(S, T)
    assert T.m == 3 and all(P.conditions[k] for k in CONDS)


def test_not_simply_connected_rejected():
    ring = SubgraphView(SQ, [8, 9, 10, 15, 17, 22, 23, 24])
    with pytest.raises(NotSimplyConnected):
        find_parts(ring)


def test_conclusion_hypothesis_failure():
    S = SubgraphView(SQ, [8, 9, 15, 16, 17, 23, 24, 25, 31, 32])
    P = partition(S)
    with pytest.raises(HypothesisFailed):
        certify_conclusion(S, P, Fraction(1, 2))


@pytest.mark.parametrize("host", [triangulation_deg_k(7, 3), square_lattice(9)], ids=["deg7", "square9"])
def test_random_samples(host):
    res = run_scan(host_arrays(host), 11, sample=(60, G_SC, 2), seed=3)
    assert len(res.samples) >= 50
    for s in res.samples:
        S = SubgraphView(host, s)
        P = partition(S)
        assert all(P.conditions[k] for k in CONDS), (s, P.conditions)
        G = greedy_partition(S)
        assert all(G.conditions[k] for k in ("induced_prefixes", "single_shared_vertex", "piece_count", "dv_growth", "union")), s
        assert P.as_dict()["n"] == P.n
