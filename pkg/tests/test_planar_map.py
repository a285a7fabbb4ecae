import json

import numpy as np
import pytest

from isolab.errors import DisconnectedGraph, EulerViolation, NonInvolutiveTwin
from isolab.generators import nonnormal_chain, square_lattice, triangulation_deg_k
from isolab.planar_map import (
    PlanarMap,
    build_map,
    classify,
    dual,
    is_isomorphic,
    load_json,
    dump_json,
    map_from_dict,
)

from conftest import k4_map, triangle_map


def test_triangle_faces():
    m = triangle_map()
    assert (m.n_vertices, m.n_edges, m.n_faces) == (3, 3, 2)
    assert sorted(m.face_degree.tolist()) == [3, 3]


def test_grid_euler():
    m = square_lattice(3, whole=True)
    assert (m.n_vertices, m.n_edges, m.n_faces) == (9, 12, 5)
    assert m.n_vertices - m.n_edges + m.n_faces == 2
    assert sorted(m.face_degree[list(m.bounded_faces)].tolist()) == [4, 4, 4, 4]


def test_k4_four_faces():
    m = k4_map()
    assert m.n_faces == 4
    assert (m.face_degree == 3).all()


def test_face_partition_of_darts(deg7_r3):
    m = deg7_r3
    assert m.face_degree.sum() == m.n_darts == 2 * m.n_edges
    assert np.array_equal(np.sort(m.face_darts), np.arange(m.n_darts))


def test_outer_face_traced_ccw_bounded_cw():
    m = square_lattice(2, whole=True)
    # one bounded face, traced with next(d) = rot_next[twin[d]]
    (f,) = m.bounded_faces
    walk = m.face_walk(f)
    pos = m.positions[list(walk)]
    area = 0.5 * sum(pos[i - 1][0] * pos[i][1] - pos[i][0] * pos[i - 1][1] for i in range(len(pos)))
    assert area < 0


def test_bad_twin():
    with pytest.raises(NonInvolutiveTwin):
        PlanarMap([0, 1], [0, 1], [0, 1], 0)


def test_disconnected():
    # two separate edges
    with pytest.raises(DisconnectedGraph):
        build_map([[0], [1], [2], [3]], [[0, 1], [2, 3]], 0)


def test_euler_violation():
    # all 16 rotation systems of K4: some are planar, the rest have genus 1
    import itertools

    twins = [[0, 1], [2, 3], [4, 5], [6, 7], [8, 9], [10, 11]]
    base = [[0, 2, 4], [1, 6, 8], [3, 7, 10], [5, 9, 11]]
    planar = bad = 0
    for flips in itertools.product((False, True), repeat=4):
        rot = [r[::-1] if f else r for r, f in zip(base, flips)]
        try:
            build_map(rot, twins, 0)
            planar += 1
        except EulerViolation:
            bad += 1
    assert planar > 0 and bad > 0 and planar + bad == 16


def test_dual_of_triangle_is_theta():
    d = dual(triangle_map())
    assert d.map.n_vertices == 2 and d.map.n_edges == 3
    assert not classify(d.map).simple
    assert list(d.edge_bijection) == list(range(3))


def test_dual_counts_and_degrees(deg6_r3):
    d = dual(deg6_r3).map
    assert d.n_vertices == deg6_r3.n_faces and d.n_edges == deg6_r3.n_edges
    inner = np.flatnonzero(d.interior)
    assert inner.size > 0 and (d.degree[inner] == 3).all()
    # dual degree equals face degree
    assert np.array_equal(d.degree, deg6_r3.face_degree)


def test_double_dual_isomorphic():
    m = square_lattice(3, whole=True)
    assert is_isomorphic(dual(dual(m).map).map, m)


def test_relabel_isomorphic(deg7_r2, rng):
    perm = rng.permutation(deg7_r2.n_darts)
    r = deg7_r2.relabel_darts(perm)
    assert is_isomorphic(r, deg7_r2)
    assert classify(r) == classify(deg7_r2)


@pytest.mark.parametrize(
    "builder, simple, proper, normal",
    [
        (lambda: triangulation_deg_k(7, 3), True, True, True),
        (lambda: nonnormal_chain(n_range=(-2, 2)), True, True, False),
        (lambda: square_lattice(4), True, True, True),
    ],
)
def test_classify(builder, simple, proper, normal):
    c = classify(builder())
    assert (c.simple, c.proper, c.normal) == (simple, proper, normal)


def test_deg7_min_degree(deg7_r3):
    c = classify(deg7_r3)
    assert c.min_vertex_degree == 7 and c.standing


def test_json_round_trip(tmp_path, chain):
    p = tmp_path / "chain.json"
    dump_json(chain, p)
    back = load_json(p)
    assert back.to_json() == chain.to_json()
    assert back.labels == chain.labels and back.groups == chain.groups


def test_json_interchange_shape(deg7_r2):
    d = json.loads(deg7_r2.to_json())
    assert set(d) >= {"vertices", "twins", "outer_face_dart", "interior", "labels"}
    assert is_isomorphic(map_from_dict(d), deg7_r2)
