"""Connected induced subgraph scan (ESU order) with incremental boundary measures.

One kernel serves every exhaustive computation: linear checks over a
measure vector, min-ratio objectives with lexicographic witness tie-break,
reservoir sampling and full collection. Hosts are passed as flat arrays built
by :func:`host_arrays`.
"""

import numpy as np

from ._jit import njit

# measure vector layout
NV, NE, NF, DS, DV, DE, VOL, DT, SDF, W, COV, ONE = range(12)
N_MEAS = 12
MEASURE_NAMES = ("nv", "ne", "nf", "ds", "dv", "de", "vol", "dt", "sumdegf", "w", "covered", "one")

# guard bits
G_SC = 1
G_POLY = 2
G_FACES = 4

_MINSTD = 2147483647


class HostArrays:
    """Flat arrays describing a map for the scan kernel."""

    def __init__(self, m, allowed=None, weights=None):
        n = m.n_vertices
        ptr, nbr = m.csr()
        self.n = n
        self.ptr = ptr.astype(np.int64)
        self.nbr = nbr.astype(np.int64)
        dist_out = m.cache_get("dist_out", lambda: _dist_to_outer(m))
        # neighbor lists ordered by distance to the outer face, used to escape quickly
        gnbr = self.nbr.copy()
        for v in range(n):
            a, b = ptr[v], ptr[v + 1]
            seg = gnbr[a:b]
            gnbr[a:b] = seg[np.lexsort((seg, dist_out[seg]))]
        self.gnbr = gnbr
        self.vptr = m.vertex_ptr.astype(np.int64)
        self.vdarts = m.vertex_darts.astype(np.int64)
        self.target = m.target.astype(np.int64)
        self.edge_of = m.edge_of_dart.astype(np.int64)
        self.twin = m.twin.astype(np.int64)
        self.face_of = m.face_of_dart.astype(np.int64)
        self.deg = m.degree.astype(np.int64)
        nf = m.n_faces
        bounded = np.ones(nf, np.bool_)
        bounded[m.outer_face] = False
        self.bounded = bounded
        self.fptr = m.face_ptr.astype(np.int64)
        self.fdarts = m.face_darts.astype(np.int64)
        self.fdeg = m.face_degree.astype(np.int64)
        # distinct vertex count per face and distinct bounded faces per vertex
        org = m.origin[m.face_darts]
        fid = np.repeat(np.arange(nf), np.diff(m.face_ptr))
        pairs = np.unique(np.stack([org, fid], 1), axis=0)
        self.fdist = np.bincount(pairs[:, 1], minlength=nf).astype(np.int64)
        pairs = pairs[bounded[pairs[:, 1]]]
        self.vfptr = np.zeros(n + 1, np.int64)
        np.cumsum(np.bincount(pairs[:, 0], minlength=n), out=self.vfptr[1:])
        self.vfaces = pairs[:, 1].astype(np.int64)
        # escape territory for hole detection: the frontier plus everything outside the interior
        self.on_outer = (m.on_outer | ~m.interior).astype(np.bool_)
        self.allowed = (m.interior if allowed is None else np.asarray(allowed)).astype(np.bool_)
        self.weights = np.zeros(n, np.int64) if weights is None else np.asarray(weights, np.int64)
        self.n_edges = m.n_edges

    def args(self):
        return (
            self.ptr, self.nbr, self.gnbr, self.vptr, self.vdarts, self.target, self.edge_of,
            self.twin, self.face_of, self.deg, self.bounded, self.fptr, self.fdarts, self.fdeg,
            self.fdist, self.vfptr, self.vfaces, self.on_outer, self.allowed, self.weights,
        )


def _dist_to_outer(m):
    from ._trace import multi_source_bfs

    ptr, nbr = m.csr()
    src = np.flatnonzero(m.on_outer | ~m.interior).astype(np.int64)
    d = multi_source_bfs(ptr, nbr, src)
    d[d < 0] = np.iinfo(np.int32).max
    return d


@njit
def _minstd(state):
    return (state * 48271) % _MINSTD


@njit
def _lex_less(a, la, b, lb):
    k = min(la, lb)
    for i in range(k):
        if a[i] != b[i]:
            return a[i] < b[i]
    return la < lb


@njit
def scan(
    ptr, nbr, gnbr, vptr, vdarts, target, edge_of, twin, face_of, deg, bounded, fptr, fdarts,
    fdeg, fdist, vfptr, vfaces, on_outer, allowed, weights,
    cap, fill, chk_coef, chk_guard, chk_minnv, obj_num, obj_den, obj_guard, obj_minnv,
    prune_cap, sample_k, sample_guard, sample_minnv, seed, collect_cap, collect_guard, collect_minnv,
):
    n = ptr.shape[0] - 1
    nfaces = fdeg.shape[0]
    n_edges = 0
    for d in range(edge_of.shape[0]):
        if edge_of[d] + 1 > n_edges:
            n_edges = edge_of[d] + 1
    n_chk = chk_coef.shape[0]
    n_obj = obj_num.shape[0]

    in_s = np.zeros(n, np.bool_)
    nbr_cnt = np.zeros(n, np.int64)
    outc = np.zeros(n, np.int64)
    face_cnt = np.zeros(nfaces, np.int64)
    sides_in = np.zeros(n_edges, np.int64)
    cover = np.zeros(n, np.int64)
    visit = np.zeros(n, np.int64)
    fmark = np.zeros(nfaces, np.int64)
    meas = np.zeros(N_MEAS, np.int64)
    meas[ONE] = 1
    full2 = np.zeros(1, np.int64)

    s_list = np.empty(cap + 1, np.int64)
    ext = np.empty((cap + 2, n), np.int64)
    ext_len = np.zeros(cap + 2, np.int64)
    hole = np.empty(n, np.int64)
    stack = np.empty(n + 1, np.int64)
    cur = np.empty(n, np.int64)
    fstack = np.empty(nfaces + 1, np.int64)

    chk_viol = np.zeros(n_chk, np.int64)
    chk_wit = np.full((n_chk, n), -1, np.int64)
    chk_wlen = np.zeros(n_chk, np.int64)
    chk_meas = np.zeros((n_chk, N_MEAS), np.int64)
    best_num = np.full(n_obj, -1, np.int64)
    best_den = np.ones(n_obj, np.int64)
    obj_wit = np.full((n_obj, n), -1, np.int64)
    obj_wlen = np.zeros(n_obj, np.int64)
    obj_meas = np.zeros((n_obj, N_MEAS), np.int64)
    smp = np.full((max(sample_k, 1), cap), -1, np.int64)
    smp_meas = np.zeros((max(sample_k, 1), N_MEAS), np.int64)
    smp_seen = 0
    rng = (seed % (_MINSTD - 1)) + 1
    col = np.full((max(collect_cap, 1), cap), -1, np.int64)
    col_meas = np.zeros((max(collect_cap, 1), N_MEAS), np.int64)
    col_n = 0
    counters = np.zeros(4, np.int64)  # nodes, pruned, filled, collect overflow

    need_sc = fill
    for i in range(n_chk):
        if chk_guard[i] & (G_SC | G_POLY):
            need_sc = True
    for i in range(n_obj):
        if obj_guard[i] & (G_SC | G_POLY):
            need_sc = True
    if sample_guard & (G_SC | G_POLY) or collect_guard & (G_SC | G_POLY):
        need_sc = True
    need_poly = False
    for i in range(n_chk):
        if chk_guard[i] & G_POLY:
            need_poly = True
    for i in range(n_obj):
        if obj_guard[i] & G_POLY:
            need_poly = True
    if sample_guard & G_POLY or collect_guard & G_POLY:
        need_poly = True

    gen = 1
    fgen = 0

    for root in range(n):
        if not allowed[root]:
            continue
        # ---- add root
        _add(root, in_s, nbr_cnt, outc, face_cnt, sides_in, cover, meas, full2, nbr, ptr, vptr, vdarts,
             target, edge_of, face_of, deg, bounded, fptr, fdarts, fdeg, fdist, vfptr, vfaces, weights)
        s_list[0] = root
        depth = 1
        el = 0
        for i in range(ptr[root], ptr[root + 1]):
            u = nbr[i]
            if u > root and allowed[u]:
                ext[1, el] = u
                el += 1
        ext_len[1] = el
        while True:
            # ---- visit the node at this depth (only right after descending)
            if ext_len[depth] >= 0:
                counters[0] += 1
                gen += 1
                nv0 = depth
                is_sc = True
                nh = 0
                if need_sc:
                    # fast reject: a bounded region of S that is not a face encloses outside vertices
                    if meas[NE] - meas[NV] + 1 > meas[NF]:
                        is_sc = False
                    else:
                        gen += 1
                        is_sc = _holes(s_list, depth, in_s, on_outer, gnbr, ptr, visit, gen, hole, stack, False) == 0
                    if not is_sc and fill:
                        gen += 1
                        nh = _holes(s_list, depth, in_s, on_outer, gnbr, ptr, visit, gen, hole, stack, True)
                        for h in range(nh):
                            _add(hole[h], in_s, nbr_cnt, outc, face_cnt, sides_in, cover, meas, full2, nbr, ptr, vptr,
                                 vdarts, target, edge_of, face_of, deg, bounded, fptr, fdarts, fdeg, fdist, vfptr,
                                 vfaces, weights)
                        counters[2] += 1
                        is_sc = True
                is_poly = False
                if need_poly and is_sc and meas[COV] == meas[NV] and meas[NF] > 0:
                    fgen += 1
                    is_poly = _faces_connected(s_list, depth, hole, nh, vfptr, vfaces, face_cnt, fdist, fptr, fdarts,
                                               face_of, twin, bounded, fmark, fgen, fstack, meas[NF])
                flags = 0
                if is_sc:
                    flags |= G_SC
                if is_poly:
                    flags |= G_POLY
                if meas[NF] > 0:
                    flags |= G_FACES
                # current vertex set, sorted (needed for witnesses)
                tot = depth + nh
                have_cur = False
                for c in range(n_chk):
                    if (chk_guard[c] & flags) != chk_guard[c] or meas[NV] < chk_minnv[c]:
                        continue
                    acc = 0
                    for k in range(N_MEAS):
                        acc += chk_coef[c, k] * meas[k]
                    if acc < 0:
                        chk_viol[c] += 1
                        if chk_viol[c] == 1:
                            if not have_cur:
                                _gather(s_list, depth, hole, nh, cur)
                                have_cur = True
                            for k in range(tot):
                                chk_wit[c, k] = cur[k]
                            chk_wlen[c] = tot
                            for k in range(N_MEAS):
                                chk_meas[c, k] = meas[k]
                for o in range(n_obj):
                    if (obj_guard[o] & flags) != obj_guard[o] or meas[NV] < obj_minnv[o]:
                        continue
                    num = 0
                    den = 0
                    for k in range(N_MEAS):
                        num += obj_num[o, k] * meas[k]
                        den += obj_den[o, k] * meas[k]
                    if den <= 0:
                        continue
                    better = False
                    if best_num[o] < 0:
                        better = True
                    else:
                        lhs = num * best_den[o]
                        rhs = best_num[o] * den
                        if lhs < rhs:
                            better = True
                        elif lhs == rhs:
                            if not have_cur:
                                _gather(s_list, depth, hole, nh, cur)
                                have_cur = True
                            better = _lex_less(cur, tot, obj_wit[o], obj_wlen[o])
                    if better:
                        if not have_cur:
                            _gather(s_list, depth, hole, nh, cur)
                            have_cur = True
                        best_num[o] = num
                        best_den[o] = den
                        for k in range(tot):
                            obj_wit[o, k] = cur[k]
                        for k in range(tot, obj_wlen[o]):
                            obj_wit[o, k] = -1
                        obj_wlen[o] = tot
                        for k in range(N_MEAS):
                            obj_meas[o, k] = meas[k]
                if sample_k > 0 and (sample_guard & flags) == sample_guard and nv0 >= sample_minnv:
                    smp_seen += 1
                    slot = -1
                    if smp_seen <= sample_k:
                        slot = smp_seen - 1
                    else:
                        rng = _minstd(rng)
                        r1 = rng
                        rng = _minstd(rng)
                        j = (r1 * _MINSTD + rng) % smp_seen
                        if j < sample_k:
                            slot = j
                    if slot >= 0:
                        for k in range(cap):
                            smp[slot, k] = s_list[k] if k < depth else -1
                        for k in range(N_MEAS):
                            smp_meas[slot, k] = meas[k]
                if collect_cap > 0 and (collect_guard & flags) == collect_guard and nv0 >= collect_minnv:
                    if col_n < collect_cap:
                        for k in range(cap):
                            col[col_n, k] = s_list[k] if k < depth else -1
                        for k in range(N_MEAS):
                            col_meas[col_n, k] = meas[k]
                        col_n += 1
                    else:
                        counters[3] += 1
                # undo fill
                for h in range(nh - 1, -1, -1):
                    _remove(hole[h], in_s, nbr_cnt, outc, face_cnt, sides_in, cover, meas, full2, nbr, ptr, vptr,
                            vdarts, target, edge_of, face_of, deg, bounded, fptr, fdarts, fdeg, fdist, vfptr,
                            vfaces, weights)
                # sound pruning for the |V| <= 4|dS| check
                if prune_cap > 0 and depth < cap:
                    r = prune_cap - depth
                    lb = 0
                    for k in range(depth):
                        u = s_list[k]
                        if outc[u] > r:
                            lb += outc[u] - r
                    if 4 * lb >= prune_cap:
                        ext_len[depth] = 0
                        counters[1] += 1
                # mark visited by flipping the sign convention: store length as -(len)-1
                ext_len[depth] = -ext_len[depth] - 1
            el = -ext_len[depth] - 1
            if depth < cap and el > 0:
                el -= 1
                w = ext[depth, el]
                ext_len[depth] = -el - 1
                # next extension: remaining siblings plus exclusive neighbors of w
                nl = 0
                for k in range(el):
                    ext[depth + 1, nl] = ext[depth, k]
                    nl += 1
                for i in range(ptr[w], ptr[w + 1]):
                    u = nbr[i]
                    if u > root and allowed[u] and not in_s[u] and nbr_cnt[u] == 0:
                        ext[depth + 1, nl] = u
                        nl += 1
                _add(w, in_s, nbr_cnt, outc, face_cnt, sides_in, cover, meas, full2, nbr, ptr, vptr, vdarts,
                     target, edge_of, face_of, deg, bounded, fptr, fdarts, fdeg, fdist, vfptr, vfaces, weights)
                s_list[depth] = w
                depth += 1
                ext_len[depth] = nl
            else:
                depth -= 1
                _remove(s_list[depth], in_s, nbr_cnt, outc, face_cnt, sides_in, cover, meas, full2, nbr, ptr, vptr,
                        vdarts, target, edge_of, face_of, deg, bounded, fptr, fdarts, fdeg, fdist, vfptr, vfaces,
                        weights)
                if depth == 0:
                    break
    return (counters, chk_viol, chk_wit, chk_wlen, chk_meas, best_num, best_den, obj_wit, obj_wlen, obj_meas,
            smp, smp_meas, min(smp_seen, sample_k), col, col_meas, col_n)


@njit
def _gather(s_list, depth, hole, nh, cur):
    for k in range(depth):
        cur[k] = s_list[k]
    for k in range(nh):
        cur[depth + k] = hole[k]
    cur[: depth + nh].sort()


@njit
def _add(w, in_s, nbr_cnt, outc, face_cnt, sides_in, cover, meas, full2, nbr, ptr, vptr, vdarts, target, edge_of,
         face_of, deg, bounded, fptr, fdarts, fdeg, fdist, vfptr, vfaces, weights):
    # edges (with multiplicity) to the current set
    to_s = 0
    for i in range(vptr[w], vptr[w + 1]):
        x = target[vdarts[i]]
        if in_s[x]:
            to_s += 1
            outc[x] -= 1
            if outc[x] == 0:
                meas[DV] -= 1
    outc[w] = deg[w] - to_s
    if outc[w] > 0:
        meas[DV] += 1
    if nbr_cnt[w] > 0:
        meas[DT] -= 1
    for i in range(ptr[w], ptr[w + 1]):
        x = nbr[i]
        nbr_cnt[x] += 1
        if nbr_cnt[x] == 1 and not in_s[x]:
            meas[DT] += 1
    in_s[w] = True
    meas[NV] += 1
    meas[NE] += to_s
    meas[VOL] += deg[w]
    meas[W] += weights[w]
    for i in range(vfptr[w], vfptr[w + 1]):
        f = vfaces[i]
        face_cnt[f] += 1
        if face_cnt[f] == fdist[f]:
            meas[NF] += 1
            meas[SDF] += fdeg[f]
            for j in range(fptr[f], fptr[f + 1]):
                d = fdarts[j]
                e = edge_of[d]
                sides_in[e] += 1
                if sides_in[e] == 2:
                    full2[0] += 1
                u = target[d]
                cover[u] += 1
                if cover[u] == 1:
                    meas[COV] += 1
    meas[DS] = meas[VOL] - 2 * meas[NE]
    meas[DE] = meas[NE] - full2[0]


@njit
def _remove(w, in_s, nbr_cnt, outc, face_cnt, sides_in, cover, meas, full2, nbr, ptr, vptr, vdarts, target, edge_of,
            face_of, deg, bounded, fptr, fdarts, fdeg, fdist, vfptr, vfaces, weights):
    for i in range(vfptr[w], vfptr[w + 1]):
        f = vfaces[i]
        if face_cnt[f] == fdist[f]:
            meas[NF] -= 1
            meas[SDF] -= fdeg[f]
            for j in range(fptr[f], fptr[f + 1]):
                d = fdarts[j]
                e = edge_of[d]
                if sides_in[e] == 2:
                    full2[0] -= 1
                sides_in[e] -= 1
                u = target[d]
                cover[u] -= 1
                if cover[u] == 0:
                    meas[COV] -= 1
        face_cnt[f] -= 1
    in_s[w] = False
    if outc[w] > 0:
        meas[DV] -= 1
    outc[w] = 0
    to_s = 0
    for i in range(vptr[w], vptr[w + 1]):
        x = target[vdarts[i]]
        if in_s[x]:
            to_s += 1
            if outc[x] == 0:
                meas[DV] += 1
            outc[x] += 1
    for i in range(ptr[w], ptr[w + 1]):
        x = nbr[i]
        nbr_cnt[x] -= 1
        if nbr_cnt[x] == 0 and not in_s[x]:
            meas[DT] -= 1
    if nbr_cnt[w] > 0:
        meas[DT] += 1
    meas[NV] -= 1
    meas[NE] -= to_s
    meas[VOL] -= deg[w]
    meas[W] -= weights[w]
    meas[DS] = meas[VOL] - 2 * meas[NE]
    meas[DE] = meas[NE] - full2[0]


@njit
def _holes(s_list, depth, in_s, on_outer, gnbr, ptr, visit, gen, hole, stack, collect):
    """Vertices of components of host - S that cannot reach the frontier.

    Searches start at every outside neighbor of S and descend toward the
    frontier first. With ``collect`` False the search stops at the first hole
    and returns 1; otherwise every hole vertex is written to ``hole``.
    ``visit`` values: 2*gen for escaped territory, 2*gen+1 for the search in
    progress or a confirmed hole.
    """
    nh = 0
    mark_esc = 2 * gen
    mark_cur = 2 * gen + 1
    for k in range(depth):
        s = s_list[k]
        for i in range(ptr[s], ptr[s + 1]):
            x = gnbr[i]
            if in_s[x] or visit[x] >= mark_esc:
                continue
            # dfs from x
            top = 0
            stack[top] = x
            top += 1
            visit[x] = mark_cur
            start = nh
            cnt = 0
            escaped = False
            while top > 0:
                top -= 1
                v = stack[top]
                hole[start + cnt] = v
                cnt += 1
                if on_outer[v]:
                    escaped = True
                    break
                hit = False
                for j in range(ptr[v + 1] - 1, ptr[v] - 1, -1):
                    y = gnbr[j]
                    if in_s[y]:
                        continue
                    if visit[y] == mark_esc:
                        hit = True
                        break
                    if visit[y] != mark_cur:
                        visit[y] = mark_cur
                        stack[top] = y
                        top += 1
                if hit:
                    escaped = True
                    break
            if escaped:
                for j in range(cnt):
                    visit[hole[start + j]] = mark_esc
                for j in range(top):
                    visit[stack[j]] = mark_esc
            else:
                if not collect:
                    return 1
                nh += cnt
    return nh


@njit
def _faces_connected(s_list, depth, hole, nh, vfptr, vfaces, face_cnt, fdist, fptr, fdarts, face_of, twin, bounded,
                     fmark, fgen, fstack, nf):
    # pick any complete face, then flood across shared edges among complete faces
    first = -1
    for k in range(depth + nh):
        v = s_list[k] if k < depth else hole[k - depth]
        for i in range(vfptr[v], vfptr[v + 1]):
            f = vfaces[i]
            if face_cnt[f] == fdist[f]:
                first = f
                break
        if first >= 0:
            break
    if first < 0:
        return False
    top = 0
    fstack[top] = first
    top += 1
    fmark[first] = fgen
    seen = 1
    while top > 0:
        top -= 1
        f = fstack[top]
        for j in range(fptr[f], fptr[f + 1]):
            g = face_of[twin[fdarts[j]]]
            if bounded[g] and fmark[g] != fgen and face_cnt[g] == fdist[g]:
                fmark[g] = fgen
                seen += 1
                fstack[top] = g
                top += 1
    return seen == nf


# ------------------------------------------------------------------------------------
# python-side driver
# ------------------------------------------------------------------------------------


def coef_vector(terms) -> np.ndarray:
    """Measure-name -> coefficient mapping as a dense vector."""
    vec = np.zeros(N_MEAS, np.int64)
    for name, c in dict(terms).items():
        vec[MEASURE_NAMES.index(name)] = int(c)
    return vec


class ScanResult:
    def __init__(self, raw, checks, objectives):
        (counters, viol, cw, cwl, cm, bn, bd, ow, owl, om, smp, smp_meas, n_smp, col, col_meas, col_n) = raw
        self.nodes = int(counters[0])
        self.pruned = int(counters[1])
        self.filled = int(counters[2])
        self.collect_overflow = int(counters[3])
        self.violations = [int(x) for x in viol]
        self.violation_witness = [tuple(int(v) for v in cw[i, : cwl[i]]) for i in range(len(checks))]
        self.violation_measures = [_meas_dict(cm[i]) for i in range(len(checks))]
        self.best = []
        for i in range(len(objectives)):
            if bn[i] < 0:
                self.best.append(None)
            else:
                self.best.append((int(bn[i]), int(bd[i]), tuple(int(v) for v in ow[i, : owl[i]]), _meas_dict(om[i])))
        self.samples = [tuple(int(v) for v in row if v >= 0) for row in smp[:n_smp]]
        self.sample_measures = [_meas_dict(r) for r in smp_meas[:n_smp]]
        self.collected = [tuple(int(v) for v in row if v >= 0) for row in col[:col_n]]
        self.collected_measures = [_meas_dict(r) for r in col_meas[:col_n]]


def _meas_dict(row) -> dict:
    return {name: int(row[i]) for i, name in enumerate(MEASURE_NAMES) if name != "one"}


def run_scan(
    arrays: HostArrays,
    cap: int,
    fill: bool = False,
    checks=(),
    objectives=(),
    prune_cap: int = 0,
    sample=None,
    collect=None,
    seed: int = 0,
) -> ScanResult:
    """Run the scan kernel.

    ``checks``: iterable of (terms, guard, min_nv); a node violates a check when
    the linear form is negative. ``objectives``: (num_terms, den_terms, guard,
    min_nv) minimized as num/den over nodes with den > 0. ``sample``: (k, guard,
    min_nv) reservoir; ``collect``: (capacity, guard, min_nv).
    """
    checks = list(checks)
    objectives = list(objectives)
    chk_coef = np.array([coef_vector(t) for t, _, _ in checks], np.int64).reshape(len(checks), N_MEAS)
    chk_guard = np.array([g for _, g, _ in checks], np.int64)
    chk_minnv = np.array([m for _, _, m in checks], np.int64)
    obj_num = np.array([coef_vector(a) for a, _, _, _ in objectives], np.int64).reshape(len(objectives), N_MEAS)
    obj_den = np.array([coef_vector(b) for _, b, _, _ in objectives], np.int64).reshape(len(objectives), N_MEAS)
    obj_guard = np.array([g for _, _, g, _ in objectives], np.int64)
    obj_minnv = np.array([m for _, _, _, m in objectives], np.int64)
    sk, sg, sm = sample if sample else (0, 0, 0)
    ck, cg, cm = collect if collect else (0, 0, 0)
    raw = scan(
        *arrays.args(), int(cap), bool(fill), chk_coef, chk_guard, chk_minnv, obj_num, obj_den, obj_guard,
        obj_minnv, int(prune_cap), int(sk), int(sg), int(sm), int(seed), int(ck), int(cg), int(cm),
    )
    return ScanResult(raw, checks, objectives)
