import itertools

import networkx as nx
import numpy as np
import pytest

from isolab.generators import nonnormal_chain, square_lattice, triangulation_deg_k
from isolab.planar_map import from_positions


@pytest.fixture(scope="session")
def deg7_r3():
    return triangulation_deg_k(7, 3)


@pytest.fixture(scope="session")
def deg7_r2():
    return triangulation_deg_k(7, 2)


@pytest.fixture(scope="session")
def deg6_r3():
    return triangulation_deg_k(6, 3)


@pytest.fixture(scope="session")
def sq5():
    return square_lattice(5)


@pytest.fixture(scope="session")
def chain():
    return nonnormal_chain(n_range=(-3, 3))


def to_nx(m):
    g = nx.MultiGraph()
    g.add_nodes_from(range(m.n_vertices))
    for e in range(m.n_edges):
        g.add_edge(*m.edge_endpoints(e))
    return g


def brute_connected_subsets(m, max_size, allowed=None):
    """Every connected vertex subset of the allowed region, by testing all subsets."""
    g = nx.Graph(to_nx(m))
    nodes = [v for v in range(m.n_vertices) if allowed is None or allowed[v]]
    out = set()
    for k in range(1, max_size + 1):
        for combo in itertools.combinations(nodes, k):
            if nx.is_connected(g.subgraph(combo)):
                out.add(frozenset(combo))
    return out


def triangle_map():
    return from_positions([(0, 0), (1, 0), (0, 1)], [(0, 1), (1, 2), (2, 0)])


def k4_map():
    return from_positions([(0, 0), (4, 0), (2, 4), (2, 1.3)], [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)])


@pytest.fixture
def rng():
    return np.random.default_rng(0)
