# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled search kernel.

Operation-for-operation port of _core_py.run_restart (scan selection only);
the pure module is the reference and the two are cross-checked in tests.
"""

from time import monotonic

import numpy as np

COMPLETED = 0
CAPPED = 1
TIMED_OUT = 2
CERTIFIED = 3


cdef inline void _do_assign(int v, int c, int p, int[:] assign, int[:] ncc,
                            int[:] blocked, int[:] unc_deg, int[:] color_use,
                            int[:] indptr, int[:] nbrs, unsigned char[:] mask,
                            int* distinct, int* n_colored) noexcept nogil:
    cdef int i, u, base
    assign[v] = c
    n_colored[0] += 1
    color_use[c] += 1
    if color_use[c] == 1:
        distinct[0] += 1
    for i in range(indptr[v], indptr[v + 1]):
        u = nbrs[i]
        unc_deg[u] -= 1
        base = u * p + c
        ncc[base] += 1
        if ncc[base] == 1 and mask[base]:
            blocked[u] += 1


cdef inline void _do_unassign(int v, int c, int p, int[:] assign, int[:] ncc,
                              int[:] blocked, int[:] unc_deg, int[:] color_use,
                              int[:] indptr, int[:] nbrs, unsigned char[:] mask,
                              int* distinct, int* n_colored) noexcept nogil:
    cdef int i, u, base
    for i in range(indptr[v], indptr[v + 1]):
        u = nbrs[i]
        base = u * p + c
        ncc[base] -= 1
        if ncc[base] == 0 and mask[base]:
            blocked[u] -= 1
        unc_deg[u] += 1
    color_use[c] -= 1
    if color_use[c] == 0:
        distinct[0] -= 1
    assign[v] = -1
    n_colored[0] -= 1


cdef inline int _select(int n, int p, int[:] assign, int[:] blocked,
                        int[:] list_size, int[:] unc_deg) noexcept nogil:
    cdef int best_v = -1
    cdef int bd = -1
    cdef int bu = -1
    cdef int v, d, u_
    for v in range(n):
        if assign[v] >= 0:
            continue
        d = p - list_size[v] + blocked[v]
        if d < bd:
            continue
        u_ = unc_deg[v]
        if d > bd or u_ > bu:
            bd = d
            bu = u_
            best_v = v
    return best_v


def run_restart(pp, init_vs, init_cs, int ub, int lb, long long cap,
                double deadline, bint prune=True, select="scan"):
    """See _core_py.run_restart; identical contract."""
    if select != "scan":
        raise ValueError(f"unknown select variant: {select!r}")
    cdef int n = pp.n
    cdef int p = pp.p
    cdef int[:] indptr = pp.indptr
    cdef int[:] nbrs = pp.nbrs
    cdef unsigned char[:] mask = pp.mask
    cdef int[:] list_size = pp.list_size

    assign_arr = np.full(max(n, 1), -1, dtype=np.int32)
    ncc_arr = np.zeros(max(n * p, 1), dtype=np.int32)
    blocked_arr = np.zeros(max(n, 1), dtype=np.int32)
    unc_arr = np.zeros(max(n, 1), dtype=np.int32)
    use_arr = np.zeros(max(p, 1), dtype=np.int32)
    fv_arr = np.zeros(n + 1, dtype=np.int32)
    fc_arr = np.zeros(n + 1, dtype=np.int32)
    fa_arr = np.zeros(n + 1, dtype=np.int32)
    best_arr = np.zeros(max(n, 1), dtype=np.int32)

    cdef int[:] assign = assign_arr
    cdef int[:] ncc = ncc_arr
    cdef int[:] blocked = blocked_arr
    cdef int[:] unc_deg = unc_arr
    cdef int[:] color_use = use_arr
    cdef int[:] fv = fv_arr
    cdef int[:] fc = fc_arr
    cdef int[:] fa = fa_arr
    cdef int[:] best = best_arr

    cdef int distinct = 0
    cdef int n_colored = 0
    cdef long long nodes = 0
    cdef int best_count = -1
    cdef bint have_best = False
    cdef bint descended = False
    cdef int v, c, cc, depth, nd, i

    for v in range(n):
        unc_deg[v] = indptr[v + 1] - indptr[v]

    for i in range(len(init_vs)):
        v = init_vs[i]
        c = init_cs[i]
        if assign[v] >= 0 or not mask[v * p + c] or ncc[v * p + c] != 0:
            raise ValueError(f"invalid initial placement ({v}, {c})")
        _do_assign(v, c, p, assign, ncc, blocked, unc_deg, color_use,
                   indptr, nbrs, mask, &distinct, &n_colored)
        if prune and distinct >= ub:
            return COMPLETED, 0, -1, None

    if n_colored == n:
        best_count = distinct
        out = [assign[i] for i in range(n)]
        if prune and distinct <= lb:
            return CERTIFIED, 0, best_count, out
        return COMPLETED, 0, best_count, out

    depth = 0
    fv[0] = _select(n, p, assign, blocked, list_size, unc_deg)
    fc[0] = -1
    fa[0] = 0

    while depth >= 0:
        v = fv[depth]
        cc = fc[depth] + 1
        if fa[depth]:
            _do_unassign(v, fc[depth], p, assign, ncc, blocked, unc_deg,
                         color_use, indptr, nbrs, mask, &distinct, &n_colored)
            fa[depth] = 0
        descended = False
        while cc < p:
            if mask[v * p + cc] and ncc[v * p + cc] == 0:
                if cap > 0 and nodes >= cap:
                    return (CAPPED, nodes, best_count,
                            best_arr[:n].tolist() if have_best else None)
                nodes += 1
                if (nodes & 255) == 0 and monotonic() > deadline:
                    return (TIMED_OUT, nodes, best_count,
                            best_arr[:n].tolist() if have_best else None)
                nd = distinct + (0 if color_use[cc] else 1)
                if prune and nd >= ub:
                    cc += 1
                    continue
                _do_assign(v, cc, p, assign, ncc, blocked, unc_deg, color_use,
                           indptr, nbrs, mask, &distinct, &n_colored)
                if n_colored == n:
                    if best_count < 0 or distinct < best_count:
                        best_count = distinct
                        best[: n] = assign[: n]
                        have_best = True
                        ub = distinct
                        if prune and distinct <= lb:
                            return (CERTIFIED, nodes, best_count,
                                    best_arr[:n].tolist())
                    _do_unassign(v, cc, p, assign, ncc, blocked, unc_deg,
                                 color_use, indptr, nbrs, mask,
                                 &distinct, &n_colored)
                    cc += 1
                    continue
                fc[depth] = cc
                fa[depth] = 1
                depth += 1
                fv[depth] = _select(n, p, assign, blocked, list_size, unc_deg)
                fc[depth] = -1
                fa[depth] = 0
                descended = True
                break
            cc += 1
        if not descended:
            depth -= 1

    return (COMPLETED, nodes, best_count,
            best_arr[:n].tolist() if have_best else None)
