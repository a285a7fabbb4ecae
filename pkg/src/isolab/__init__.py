"""Isoperimetric constants, combinatorial curvature and hyperbolicity on planar maps."""

__version__ = "0.1.0"

from ._jit import backend
from .errors import IsolabError
from .planar_map import PlanarMap, build_map, classify, dual, from_face_walks, load_json, dump_json
from .subgraphs import SubgraphView, boundaries, is_simply_connected, fill_holes, enumerate_connected_subgraphs
from .curvature import vertex_curvature, face_curvature, edge_curvature, upper_average_estimate
from .isoperimetry import ratio, estimate
from .decomposition import find_parts, contract, partition
from .hyperbolicity import metric, thinness, detour_growth, growth_bound_check
from . import generators

__all__ = [
    "__version__",
    "backend",
    "IsolabError",
    "PlanarMap",
    "build_map",
    "from_face_walks",
    "classify",
    "dual",
    "load_json",
    "dump_json",
    "SubgraphView",
    "boundaries",
    "is_simply_connected",
    "fill_holes",
    "enumerate_connected_subgraphs",
    "vertex_curvature",
    "face_curvature",
    "edge_curvature",
    "upper_average_estimate",
    "ratio",
    "estimate",
    "find_parts",
    "contract",
    "partition",
    "metric",
    "thinness",
    "detour_growth",
    "growth_bound_check",
    "generators",
]
