import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from isolab.errors import CapExceeded, TouchesTruncationBoundary
from isolab.generators import lambda_attachment, nonnormal_chain, path_graph, square_lattice, triangulation_deg_k
from isolab.subgraphs import (
    SubgraphView,
    boundaries,
    classify_face_graph,
    count_connected_subgraphs,
    enumerate_connected_subgraphs,
    fill_holes,
    is_simply_connected,
)

from conftest import brute_connected_subsets, to_nx, triangle_map


def test_star_of_deg7_vertex(deg7_r3):
    b = boundaries(SubgraphView(deg7_r3, [0]))
    assert (b.edge_boundary, b.volume, b.vertex_boundary, b.n_edges, b.n_faces) == (7, 7, 1, 0, 0)
    assert b.outer_vertex_boundary == 7


def test_lambda_blocks():
    m = lambda_attachment()
    for k, nk in enumerate(m.family["params"]["schedule"], 1):
        b = boundaries(SubgraphView(m, m.groups[f"S_{k}"]))
        assert b.vertex_boundary == 1 and b.n_vertices == 4 * nk + 1


def test_chain_blocks(chain):
    for n in range(-3, 4):
        b = boundaries(SubgraphView(chain, chain.groups[f"S_{n}"]))
        assert b.vertex_boundary == b.surrounding_edges == 4
        assert b.n_faces == 3 * abs(n) + 1 and b.n_vertices == 2 * abs(n) + 4


def test_truncation_guard(deg7_r2):
    outer = int(np.flatnonzero(~deg7_r2.interior)[0])
    with pytest.raises(TouchesTruncationBoundary):
        boundaries(SubgraphView(deg7_r2, [outer]))


def test_simply_connected_examples(deg7_r3):
    m = deg7_r3
    f = m.bounded_faces[0]
    assert is_simply_connected(SubgraphView(m, m.face_walk(f)))
    ring = SubgraphView(m, range(1, 8))  # ring 1 around the center
    assert not is_simply_connected(ring)
    filled = fill_holes(ring)
    assert filled.vertices == frozenset(range(8)) and is_simply_connected(filled)
    assert fill_holes(filled) == filled


def test_whole_grid_ring_missing_corner():
    # the outer ring of a whole grid minus one corner still encloses the center
    m = square_lattice(3, whole=True)
    ring = SubgraphView(m, [1, 2, 3, 5, 6, 7, 8])
    assert not is_simply_connected(ring)


def test_face_graph_shapes():
    m = square_lattice(4, whole=True)
    two = classify_face_graph(SubgraphView(m, [0, 1, 2, 4, 5, 6]))
    assert two.face_graph and two.polygon and two.interior_connected
    # two squares sharing only vertex 5
    diag = classify_face_graph(SubgraphView(m, [0, 1, 4, 5, 6, 9, 10]))
    assert not diag.polygon
    diag2 = classify_face_graph(SubgraphView(m, [0, 1, 4, 5, 10, 11, 14, 15, 6, 9]))
    assert diag2.face_graph


def test_counts_small():
    assert count_connected_subgraphs(path_graph(3).with_interior(np.ones(3, bool)), 3) == 6
    assert count_connected_subgraphs(triangle_map().with_interior(np.ones(3, bool)), 3) == 7


@pytest.mark.parametrize("n, cap", [(3, 4), (4, 5), (4, 16)])
def test_counts_match_bitmask_oracle(n, cap):
    m = square_lattice(n, whole=True)
    got = {S.vertices for S in enumerate_connected_subgraphs(m, cap, cap=16)}
    assert got == brute_connected_subsets(m, cap)


def test_counts_match_oracle_truncation(deg7_r2):
    got = [S.vertices for S in enumerate_connected_subgraphs(deg7_r2, 5)]
    assert len(got) == len(set(got))
    assert set(got) == brute_connected_subsets(deg7_r2, 5, deg7_r2.interior)


def test_simply_connected_filter_matches_python(sq5):
    sc = {S.vertices for S in enumerate_connected_subgraphs(sq5, 7, simply_connected=True)}
    allc = [S for S in enumerate_connected_subgraphs(sq5, 7)]
    assert sc == {S.vertices for S in allc if is_simply_connected(S)}
    polys = {S.vertices for S in enumerate_connected_subgraphs(sq5, 7, polygons=True)}
    assert polys == {S.vertices for S in allc if classify_face_graph(S).polygon}


def test_cap_guard(deg7_r2):
    with pytest.raises(CapExceeded):
        list(enumerate_connected_subgraphs(deg7_r2, 15))


def test_order_deterministic(deg7_r2):
    a = [S.sorted_vertices for S in enumerate_connected_subgraphs(deg7_r2, 4)]
    b = [S.sorted_vertices for S in enumerate_connected_subgraphs(deg7_r2, 4)]
    assert a == b


def _random_connected(m, rng, size):
    g = to_nx(m)
    inner = np.flatnonzero(m.interior)
    S = {int(rng.choice(inner))}
    while len(S) < size:
        frontier = sorted({int(w) for v in S for w in g.neighbors(v) if m.interior[w]} - S)
        if not frontier:
            break
        S.add(int(rng.choice(frontier)))
    return SubgraphView(m, S)


HOSTS = {"d7": triangulation_deg_k(7, 4), "sq": square_lattice(9), "chain": nonnormal_chain(n_range=(-2, 2))}


@settings(max_examples=60, deadline=None)
@given(host=st.sampled_from(sorted(HOSTS)), seed=st.integers(0, 10**6), size=st.integers(1, 25))
def test_boundary_invariants(host, seed, size):
    m = HOSTS[host]
    S = _random_connected(m, np.random.default_rng(seed), size)
    b = boundaries(S)
    assert set(S.vertex_boundary()) <= S.vertices
    assert set(S.surrounding_edges()) <= set(S.edges)
    assert set(S.face_boundary()) <= set(S.faces)
    assert b.vertex_boundary <= b.edge_boundary
    assert b.volume == 2 * b.n_edges + b.edge_boundary
    F = fill_holes(S)
    assert S.vertices <= F.vertices and is_simply_connected(F) and fill_holes(F) == F
    if is_simply_connected(S) and len(S) >= 2:
        assert b.n_edges <= 2 * b.vertex_boundary + 3 * b.n_faces - 3


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(0, 10**6), size=st.integers(2, 20))
def test_surrounding_edges_match_dual_cut(seed, size):
    from isolab.planar_map import dual

    m = HOSTS["d7"]
    S = fill_holes(_random_connected(m, np.random.default_rng(seed), size))
    if not classify_face_graph(S).face_graph:
        return
    fm = S.face_mask
    fo = m.face_of_dart[m.edge_dart]
    ft = m.face_of_dart[m.twin[m.edge_dart]]
    cut = int(np.sum(fm[fo] != fm[ft]))
    # chords of S with no flanking face in F(S) count in d_e S but cross no dual edge
    chords = [e for e in S.surrounding_edges() if not (fm[fo[e]] or fm[ft[e]])]
    assert cut == len(S.surrounding_edges()) - len(chords)
    if classify_face_graph(S).polygon:
        assert not chords
    assert dual(m).map.n_edges == m.n_edges


def test_open_question_connected_minimum_equals_unrestricted():
    """Over all nonempty subsets of a small region, the j and kappa minima are attained on connected sets."""
    from fractions import Fraction
    import itertools

    from isolab.isoperimetry import ratio

    m = square_lattice(5)
    inner = [int(v) for v in np.flatnonzero(m.interior)]
    g = nx.Graph(to_nx(m))
    best_all = {"j": None, "kappa": None, "iota": None}
    best_conn = dict(best_all)
    for k in range(1, len(inner) + 1):
        for combo in itertools.combinations(inner, k):
            S = SubgraphView(m, combo)
            conn = nx.is_connected(g.subgraph(combo))
            for kind in best_all:
                try:
                    r = ratio(kind, S)
                except Exception:
                    continue
                if best_all[kind] is None or r < best_all[kind]:
                    best_all[kind] = r
                if conn and (best_conn[kind] is None or r < best_conn[kind]):
                    best_conn[kind] = r
    assert best_all == best_conn
