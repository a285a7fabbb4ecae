from fractions import Fraction

import numpy as np
import pytest

from isolab.curvature import (
    HIGUCHI_GAP,
    average,
    carriers,
    edge_curvature,
    face_curvature,
    upper_average_estimate,
    verify_euler_bounds,
    vertex_curvature,
    vertex_curvatures,
)
from isolab.errors import AssumptionViolated, EmptySet, NotInterior, PreconditionNotMet, RadiusExceedsInterior
from isolab.generators import nonnormal_chain, square_lattice, triangulation_deg_k
from isolab.planar_map import dual
from isolab.subgraphs import SubgraphView

from conftest import triangle_map


def _interior_edges(m):
    a = m.origin[m.edge_dart]
    b = m.target[m.edge_dart]
    return [int(e) for e in np.flatnonzero(m.interior[a] & m.interior[b])]


def test_deg7_values(deg7_r3):
    m = deg7_r3
    assert vertex_curvature(m, 0).value == Fraction(-1, 6)
    for e in _interior_edges(m)[:20]:
        assert edge_curvature(m, e).value == Fraction(-1, 21)
    f = carriers(m, "chi")[0]
    assert face_curvature(m, f).value == Fraction(-1, 14)


def test_edge_curvature_per_term(deg7_r3):
    # independent summation: per-vertex share plus per-face share
    m = deg7_r3
    for e in _interior_edges(m)[:30]:
        a, b = m.edge_endpoints(e)
        f1, f2 = m.edge_faces(e)
        terms = [Fraction(1, int(m.degree[a])), Fraction(1, int(m.degree[b])),
                 Fraction(1, len(m.face_walk(f1))), Fraction(1, len(m.face_walk(f2)))]
        assert edge_curvature(m, e).value == sum(terms) - 1


def test_flat_lattice(deg6_r3):
    assert set(vertex_curvatures(deg6_r3).values()) == {0}
    for kind in ("phi", "psi", "chi"):
        for rep in upper_average_estimate(deg6_r3, kind, [1, 2]):
            assert rep.mean == 0


def test_chain_v_vertices():
    m = nonnormal_chain(n_range=(-2, 2))
    psi = vertex_curvatures(m)
    vs = [v for v, lab in m.labels.items() if lab.startswith("v_")]
    assert vs and all(psi[v] == Fraction(5, 12) for v in vs)
    for rep in upper_average_estimate(m, "psi", [1, 2]):
        assert rep.mean <= Fraction(-1, 6)


def test_upper_average_deg7(deg7_r3):
    reps = upper_average_estimate(deg7_r3, "psi", [1, 2])
    assert [r.mean for r in reps] == [Fraction(-1, 6)] * 2
    with pytest.raises(RadiusExceedsInterior):
        upper_average_estimate(deg7_r3, "psi", [9])
    with pytest.raises(ValueError):
        upper_average_estimate(deg7_r3, "psi", [2, 1])


def test_average_exact(deg7_r3):
    rep = average(deg7_r3, "psi", [0])
    assert rep.mean == Fraction(-1, 6) and rep.support_size == 1
    vals = [Fraction(-1, 6)] * 8
    assert average(deg7_r3, "psi", range(8)).mean == sum(vals) / 8
    with pytest.raises(EmptySet):
        average(deg7_r3, "psi", [])


def test_guards(deg7_r2):
    outer = int(np.flatnonzero(~deg7_r2.interior)[0])
    with pytest.raises(NotInterior):
        vertex_curvature(deg7_r2, outer)
    with pytest.raises(NotInterior):
        face_curvature(deg7_r2, deg7_r2.outer_face)
    tri = triangle_map().with_interior(np.ones(3, bool))
    with pytest.raises(AssumptionViolated):
        vertex_curvature(tri, 0)
    assert vertex_curvature(tri, 0, allow_violation=True).value == 1 - 1 + Fraction(1, 3) + Fraction(1, 3)


def test_dual_vertex_curvature_equals_face_curvature(deg7_r3):
    d = dual(deg7_r3)
    dm = d.map
    checked = 0
    for f in carriers(deg7_r3, "chi"):
        x = f  # dual vertices carry primal face ids
        if not dm.interior[x]:
            continue
        assert vertex_curvature(dm, x, allow_violation=True).value == face_curvature(deg7_r3, f).value
        checked += 1
    assert checked > 10


def test_relabel_invariance(deg7_r2, rng):
    m = deg7_r2
    perm = rng.permutation(m.n_darts)
    r = m.relabel_darts(perm)
    assert vertex_curvatures(m) == vertex_curvatures(r)
    for e in _interior_edges(m):
        d = int(m.edge_dart[e])
        e2 = int(r.edge_of_dart[perm[d]])
        assert edge_curvature(r, e2).value == edge_curvature(m, e).value


def test_euler_examples():
    host = triangulation_deg_k(7, 3)
    rec = verify_euler_bounds(SubgraphView(host, host.face_walk(host.bounded_faces[0])))
    assert (rec.facebound_lhs, rec.facebound_rhs, rec.edgenumber_lhs, rec.edgenumber_rhs) == (3, 6, 6, 6)
    m = square_lattice(5)
    block = [6, 7, 8, 11, 12, 13, 16, 17, 18]  # 3x3 vertices = 2x2 faces
    rec = verify_euler_bounds(SubgraphView(m, block))
    assert rec.polygon and (rec.edgenumber_lhs, rec.edgenumber_rhs) == (24, 24)
    ring = SubgraphView(m, [6, 7, 8, 11, 13, 16, 17, 18])
    with pytest.raises(PreconditionNotMet):
        verify_euler_bounds(ring)


def test_higuchi_gap_on_hosts():
    for m in (triangulation_deg_k(7, 3), nonnormal_chain(n_range=(-2, 2))):
        for v in vertex_curvatures(m).values():
            assert v >= 0 or v <= -HIGUCHI_GAP
