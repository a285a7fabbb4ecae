"""Kernels over raw dart arrays: face tracing, connectivity, rotation checks."""

import numpy as np

from ._jit import njit


@njit
def trace_faces(twin, rot_next):
    """Partition darts into faces with next(d) = rot_next[twin[d]].

    Faces are numbered in order of their smallest dart; each cycle is listed
    starting from that dart. Returns (face_of_dart, face_darts, face_ptr).
    """
    n = twin.shape[0]
    face_of = np.full(n, -1, np.int64)
    order = np.empty(n, np.int64)
    ptr = np.empty(n + 2, np.int64)
    nf = 0
    pos = 0
    for d0 in range(n):
        if face_of[d0] >= 0:
            continue
        ptr[nf] = pos
        d = d0
        while face_of[d] < 0:
            face_of[d] = nf
            order[pos] = d
            pos += 1
            d = rot_next[twin[d]]
        nf += 1
    ptr[nf] = pos
    return face_of, order, ptr[: nf + 1].copy()


@njit
def rotation_cycles_ok(origin, rot_next, n_vertices):
    """True iff every rot_next cycle stays at one vertex and each vertex has one cycle."""
    n = origin.shape[0]
    seen = np.zeros(n, np.bool_)
    cycles = np.zeros(n_vertices, np.int64)
    for d0 in range(n):
        if seen[d0]:
            continue
        v = origin[d0]
        cycles[v] += 1
        d = d0
        while not seen[d]:
            if origin[d] != v:
                return False
            seen[d] = True
            d = rot_next[d]
        if d != d0:
            return False
    for v in range(n_vertices):
        if cycles[v] > 1:
            return False
    return True


@njit
def count_components(vptr, vdarts, target, n_vertices):
    comp = np.full(n_vertices, -1, np.int64)
    stack = np.empty(n_vertices, np.int64)
    nc = 0
    for s in range(n_vertices):
        if comp[s] >= 0:
            continue
        comp[s] = nc
        top = 0
        stack[top] = s
        top += 1
        while top > 0:
            top -= 1
            v = stack[top]
            for i in range(vptr[v], vptr[v + 1]):
                w = target[vdarts[i]]
                if comp[w] < 0:
                    comp[w] = nc
                    stack[top] = w
                    top += 1
        nc += 1
    return nc


@njit
def bfs_distances(ptr, nbr, src, blocked):
    """Unit-weight BFS on a CSR graph; blocked vertices are never entered. -1 = unreachable."""
    n = ptr.shape[0] - 1
    dist = np.full(n, -1, np.int32)
    if blocked[src]:
        return dist
    queue = np.empty(n, np.int64)
    head = 0
    tail = 0
    dist[src] = 0
    queue[tail] = src
    tail += 1
    while head < tail:
        v = queue[head]
        head += 1
        dv = dist[v] + 1
        for i in range(ptr[v], ptr[v + 1]):
            w = nbr[i]
            if dist[w] < 0 and not blocked[w]:
                dist[w] = dv
                queue[tail] = w
                tail += 1
    return dist


@njit
def multi_source_bfs(ptr, nbr, sources):
    n = ptr.shape[0] - 1
    dist = np.full(n, -1, np.int32)
    queue = np.empty(n, np.int64)
    head = 0
    tail = 0
    for s in sources:
        if dist[s] < 0:
            dist[s] = 0
            queue[tail] = s
            tail += 1
    while head < tail:
        v = queue[head]
        head += 1
        for i in range(ptr[v], ptr[v + 1]):
            w = nbr[i]
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue[tail] = w
                tail += 1
    return dist
