"""DOT and SVG rendering. Coordinates are cosmetic only."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.linalg import spsolve

from .planar_map import PlanarMap

__all__ = ["tutte_layout", "layout", "to_dot", "to_svg"]


def tutte_layout(m: PlanarMap) -> np.ndarray:
    """Barycentric embedding with the outer face pinned to the unit circle."""
    n = m.n_vertices
    outer = []
    for v in m.face_walk(m.outer_face):
        if v not in outer:
            outer.append(int(v))
    pos = np.zeros((n, 2))
    if len(outer) < 3 or len(outer) == n:
        ang = 2 * math.pi * np.arange(n) / max(n, 1)
        return np.column_stack([np.cos(ang), np.sin(ang)])
    # outer walk is counterclockwise; place it in order
    for i, v in enumerate(outer):
        a = 2 * math.pi * i / len(outer)
        pos[v] = (math.cos(a), math.sin(a))
    fixed = np.zeros(n, bool)
    fixed[outer] = True
    free = np.flatnonzero(~fixed)
    idx = -np.ones(n, np.int64)
    idx[free] = np.arange(free.size)
    a = m.origin
    b = m.target
    sel = ~fixed[a]
    rows = idx[a[sel]]
    cols_all = b[sel]
    # L x = rhs over the free vertices
    deg = np.bincount(rows, minlength=free.size).astype(float)
    inner = ~fixed[cols_all]
    r = np.concatenate([np.arange(free.size), rows[inner]])
    c = np.concatenate([np.arange(free.size), idx[cols_all[inner]]])
    val = np.concatenate([deg, -np.ones(int(inner.sum()))])
    L = coo_matrix((val, (r, c)), shape=(free.size, free.size)).tocsc()
    rhs = np.zeros((free.size, 2))
    np.add.at(rhs, rows[~inner], pos[cols_all[~inner]])
    pos[free, 0] = spsolve(L, rhs[:, 0])
    pos[free, 1] = spsolve(L, rhs[:, 1])
    return pos


def layout(m: PlanarMap, method: str = "auto") -> np.ndarray:
    if method == "auto" and m.positions is not None:
        return np.asarray(m.positions, float)
    return tutte_layout(m)


def _name(m: PlanarMap, v: int) -> str:
    return m.labels.get(v, str(v))


def to_dot(m: PlanarMap, method: str = "auto") -> str:
    pos = layout(m, method)
    lines = ["graph G {", "  node [shape=circle, width=0.1, fontsize=8];"]
    for v in range(m.n_vertices):
        x, y = pos[v]
        style = "" if m.interior[v] else ", color=gray"
        lines.append(f'  {v} [label="{_name(m, v)}", pos="{x:.4f},{y:.4f}!"{style}];')
    for e in range(m.n_edges):
        a, b = m.edge_endpoints(e)
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_svg(m: PlanarMap, method: str = "auto", size: int = 800, highlight=()) -> str:
    """Bounded faces as closed paths, then edges, then vertices."""
    pos = layout(m, method)
    lo = pos.min(axis=0)
    span = float(max((pos.max(axis=0) - lo).max(), 1e-9))
    pad = 20
    scale = (size - 2 * pad) / span

    def xy(v):
        x, y = pos[v]
        return pad + (x - lo[0]) * scale, size - pad - (y - lo[1]) * scale

    hl = set(int(v) for v in highlight)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">']
    out.append('<g fill="#dde8f5" fill-opacity="0.6" stroke="none">')
    for f in m.bounded_faces:
        walk = m.face_walk(f)
        pts = " L ".join(f"{x:.2f} {y:.2f}" for x, y in map(xy, walk))
        out.append(f'<path d="M {pts} Z" data-face="{f}"/>')
    out.append("</g>")
    out.append('<g stroke="#333" stroke-width="1">')
    for e in range(m.n_edges):
        a, b = m.edge_endpoints(e)
        (x1, y1), (x2, y2) = xy(a), xy(b)
        out.append(f'<line x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}"/>')
    out.append("</g>")
    out.append("<g>")
    for v in range(m.n_vertices):
        x, y = xy(v)
        fill = "#c0392b" if v in hl else ("#222" if m.interior[v] else "#999")
        out.append(f'<circle cx="{x:.2f}" cy="{y:.2f}" r="2.5" fill="{fill}"><title>{escape(_name(m, v))}</title></circle>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
