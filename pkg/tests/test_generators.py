import hashlib
from fractions import Fraction

import numpy as np
import pytest

from isolab import generators as G
from isolab.curvature import vertex_curvatures
from isolab.errors import ScheduleTooLargeForRadius, SpacingViolated
from isolab.planar_map import classify
from isolab.subgraphs import SubgraphView, boundaries


def _digest(m):
    h = hashlib.sha256()
    for a in (m.origin, m.twin, m.rot_next):
        h.update(np.asarray(a, np.int64).tobytes())
    return h.hexdigest()[:16]


GOLDEN = {
    "deg7_r3": (lambda: G.triangulation_deg_k(7, 3), (85, 196, 113, 29), "f24641fa156ece8e"),
    "deg6_r3": (lambda: G.triangulation_deg_k(6, 3), (37, 90, 55, 19), "016939b292eecac2"),
    "sq5": (lambda: G.square_lattice(5), (25, 40, 17, 9), "d54524c29f67eb47"),
    "lambda": (lambda: G.lambda_attachment(), (393, 885, 494, 210), "a2e8d9d870611ce9"),
    "chain": (lambda: G.nonnormal_chain(), (1226, 2778, 1554, 348), "2ec6e9ef53d93417"),
    "g2_3": (lambda: G.g2_multiedge_lattice(3), (3897, 11592, 7697, 3853), "33106896f2a5eb99"),
}


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_goldens(name):
    build, counts, digest = GOLDEN[name]
    m = build()
    assert (m.n_vertices, m.n_edges, m.n_faces, int(m.interior.sum())) == counts
    assert _digest(m) == digest
    assert _digest(build()) == digest  # deterministic


def test_deg7_growth():
    assert G.layer_sizes(7, 4) == [1, 7, 21, 56, 147]
    assert G.triangulation_deg_k(7, 4).n_vertices == 232
    sizes = G.layer_sizes(7, 6)
    assert all(b > a for a, b in zip(sizes[1:], sizes[2:]))
    assert sizes[-1] / sizes[-2] > 2


@pytest.mark.parametrize("k, psi", [(6, 0), (7, Fraction(-1, 6))])
def test_triangulation_curvature(k, psi):
    m = G.triangulation_deg_k(k, 2)
    assert set(vertex_curvatures(m).values()) == {psi}
    fd = m.face_degree.copy()
    fd[m.outer_face] = 3
    assert (fd == 3).all()
    assert (m.degree[m.interior] == k).all()


def test_lambda_attachment():
    m = G.lambda_attachment()
    lam = m.family["lambda"]
    assert lam["vertices"] == 5 and lam["attach_degree"] == 3
    S1 = SubgraphView(m, m.groups["S_1"])
    b = boundaries(S1)
    assert (b.n_vertices, b.vertex_boundary) == (33, 1)
    assert not classify(m).proper
    with pytest.raises(ScheduleTooLargeForRadius):
        G.lambda_attachment(count=5)


def test_chain_blocks():
    m = G.nonnormal_chain(n_range=(-2, 2))
    b = boundaries(SubgraphView(m, m.groups["S_1"]))
    assert (b.n_vertices, b.n_faces, b.surrounding_edges) == (6, 4, 4)
    c = classify(m)
    assert c.proper and not c.normal
    labels = set(m.labels.values())
    assert {"o_0", "b_1^1", "v_1^1"} <= labels


def test_g1_blocks():
    m = G.g1_multiedge()
    for n in (1, 2, 3):
        b = boundaries(SubgraphView(m, m.groups[f"S_{n}"]))
        assert (b.n_faces, b.surrounding_edges) == (2 * n + 2, 4)
    with pytest.raises(SpacingViolated):
        G.g1_multiedge(radius=5, spacing=30)


def test_g2_rule_and_face_degrees():
    m = G.g2_multiedge_lattice(3)
    assert m.family["ells"] == [1, 13, 185]
    assert m.family["C"] == G.g2_counts([1, 13, 185]) == [13, 185, 3909]
    assert m.family["rule_ok"]
    fd = np.delete(m.face_degree, m.outer_face)
    assert fd.max() <= 4
    bad = G.g2_multiedge_lattice(3, [1, 2, 3])
    assert not bad.family["rule_ok"]


def test_generate_dispatch():
    assert _digest(G.generate("triangulation_deg_k", k=7, radius=3)) == GOLDEN["deg7_r3"][2]
    with pytest.raises(ValueError):
        G.generate("nope")
