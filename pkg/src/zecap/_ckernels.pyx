# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_pykernels`` for the reference semantics."""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint64_t, int32_t, uint8_t
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

cnp.import_array()

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


def distinguishability_matrix(labels, edge_matrix):
    cdef int32_t[:, ::1] lab = np.ascontiguousarray(labels, dtype=np.int32)
    cdef uint8_t[:, ::1] em = np.ascontiguousarray(edge_matrix, dtype=np.uint8)
    cdef Py_ssize_t n = lab.shape[0], w = lab.shape[1], i, j, k
    out = np.zeros((n, n), dtype=np.uint8)
    cdef uint8_t[:, ::1] o = out
    with nogil:
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(w):
                    if em[lab[i, k], lab[j, k]]:
                        o[i, j] = 1
                        o[j, i] = 1
                        break
    return out.astype(bool)


def first_indistinguishable_pair(labels, edge_matrix):
    cdef int32_t[:, ::1] lab = np.ascontiguousarray(labels, dtype=np.int32)
    cdef uint8_t[:, ::1] em = np.ascontiguousarray(edge_matrix, dtype=np.uint8)
    cdef Py_ssize_t n = lab.shape[0], w = lab.shape[1], i, j, k
    cdef bint hit
    for i in range(n):
        for j in range(i + 1, n):
            hit = False
            for k in range(w):
                if em[lab[i, k], lab[j, k]]:
                    hit = True
                    break
            if not hit:
                return int(i), int(j)
    return None


def adjacency_bitsets(labels, edge_matrix):
    cdef int32_t[:, ::1] lab = np.ascontiguousarray(labels, dtype=np.int32)
    cdef uint8_t[:, ::1] em = np.ascontiguousarray(edge_matrix, dtype=np.uint8)
    cdef Py_ssize_t n = lab.shape[0], w = lab.shape[1], i, j, k
    cdef Py_ssize_t nb = max(1, (n + 63) // 64)
    out = np.zeros((n, nb), dtype=np.uint64)
    cdef uint64_t[:, ::1] o = out
    with nogil:
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(w):
                    if em[lab[i, k], lab[j, k]]:
                        o[i, j >> 6] |= (<uint64_t>1) << (j & 63)
                        o[j, i >> 6] |= (<uint64_t>1) << (i & 63)
                        break
    return out


cdef struct Search:
    uint64_t* adj
    Py_ssize_t n
    Py_ssize_t nb
    long long nodes
    long long budget
    bint aborted
    int* stack
    int depth
    int* best
    int best_size
    int stop_at
    bint done


cdef inline bint _empty(const uint64_t* p, Py_ssize_t nb) nogil:
    cdef Py_ssize_t b
    for b in range(nb):
        if p[b]:
            return False
    return True


cdef inline int _count(const uint64_t* p, Py_ssize_t nb) nogil:
    cdef Py_ssize_t b
    cdef int c = 0
    for b in range(nb):
        c += __builtin_popcountll(p[b])
    return c


cdef int _color_sort(Search* s, const uint64_t* p, int* order, int* colors,
                     uint64_t* uncol, uint64_t* q) nogil:
    cdef Py_ssize_t nb = s.nb, b, b2
    cdef int k = 0, color = 0, v
    cdef uint64_t* row
    memcpy(uncol, p, nb * sizeof(uint64_t))
    while not _empty(uncol, nb):
        color += 1
        memcpy(q, uncol, nb * sizeof(uint64_t))
        b = 0
        while b < nb:
            if q[b] == 0:
                b += 1
                continue
            v = <int>(b * 64 + __builtin_ctzll(q[b]))
            uncol[b] &= ~((<uint64_t>1) << (v & 63))
            q[b] &= ~((<uint64_t>1) << (v & 63))
            row = s.adj + v * nb
            for b2 in range(b, nb):
                q[b2] &= ~row[b2]
            order[k] = v
            colors[k] = color
            k += 1
    return k


cdef void _expand(Search* s, uint64_t* p) nogil:
    cdef Py_ssize_t nb = s.nb, b
    cdef int k, idx, v, i
    cdef int* order
    cdef int* colors
    cdef uint64_t* scratch
    cdef uint64_t* newp
    cdef uint64_t* row
    s.nodes += 1
    if s.nodes > s.budget:
        s.aborted = True
        return
    order = <int*>malloc(2 * s.n * sizeof(int))
    colors = order + s.n
    scratch = <uint64_t*>malloc(3 * nb * sizeof(uint64_t))
    newp = scratch + 2 * nb
    k = _color_sort(s, p, order, colors, scratch, scratch + nb)
    idx = k - 1
    while idx >= 0:
        if s.depth + colors[idx] <= s.best_size:
            break
        v = order[idx]
        row = s.adj + v * nb
        for b in range(nb):
            newp[b] = p[b] & row[b]
        s.stack[s.depth] = v
        s.depth += 1
        if _empty(newp, nb):
            if s.depth > s.best_size:
                s.best_size = s.depth
                for i in range(s.depth):
                    s.best[i] = s.stack[i]
                if s.best_size >= s.stop_at:
                    s.done = True
        else:
            _expand(s, newp)
        s.depth -= 1
        if s.aborted or s.done:
            break
        p[v >> 6] &= ~((<uint64_t>1) << (v & 63))
        idx -= 1
    free(scratch)
    free(order)


cdef Search _make(uint64_t[:, ::1] a, long long budget):
    cdef Search s
    s.adj = &a[0, 0]
    s.n = a.shape[0]
    s.nb = a.shape[1]
    s.nodes = 0
    s.budget = budget
    s.aborted = False
    s.depth = 0
    s.stack = <int*>malloc((s.n + 1) * sizeof(int))
    s.best = <int*>malloc((s.n + 1) * sizeof(int))
    s.best_size = 0
    s.stop_at = 1 << 30
    s.done = False
    return s


def max_clique(bitsets, int lower_bound=0, long long budget=100000000):
    cdef uint64_t[:, ::1] a = np.ascontiguousarray(bitsets, dtype=np.uint64)
    cdef Py_ssize_t n = a.shape[0], b
    if n == 0:
        return [], 0, True
    cdef Search s = _make(a, budget)
    s.best_size = lower_bound
    p = np.zeros(a.shape[1], dtype=np.uint64)
    cdef uint64_t[::1] pv = p
    for b in range(n):
        pv[b >> 6] |= (<uint64_t>1) << (b & 63)
    with nogil:
        _expand(&s, &pv[0])
    best = [s.best[i] for i in range(s.best_size)] if s.best_size > lower_bound else []
    nodes = min(s.nodes, budget)
    complete = not s.aborted
    free(s.stack)
    free(s.best)
    return best, nodes, complete


def first_clique(bitsets, int k, long long budget=100000000, visit=None):
    """First ``k``-clique in ``visit`` order (default ascending) by fixing vertices.

    Vertex ``v`` is kept iff the colour-bounded search finds a clique of the
    remaining size inside the surviving candidates adjacent to ``v``.  The
    result lists vertices in visit order.
    """
    cdef uint64_t[:, ::1] a = np.ascontiguousarray(bitsets, dtype=np.uint64)
    cdef Py_ssize_t n = a.shape[0], nb = a.shape[1], b, v, t
    if visit is None:
        visit = np.arange(n, dtype=np.int64)
    cdef long long[::1] vo = np.ascontiguousarray(visit, dtype=np.int64)
    if k <= 0:
        return [], 0, True
    if n == 0:
        return None, 0, True
    cdef Search s = _make(a, budget)
    cand = np.zeros(nb, dtype=np.uint64)
    sub = np.zeros(nb, dtype=np.uint64)
    chosen = np.zeros(k, dtype=np.int64)
    cdef uint64_t[::1] cv = cand
    cdef uint64_t[::1] sv = sub
    cdef long long[::1] ch = chosen
    cdef uint64_t* row
    cdef int need, n_chosen = 0
    cdef bint feasible
    for v in range(n):
        cv[v >> 6] |= (<uint64_t>1) << (v & 63)
    with nogil:
        for t in range(n):
            v = vo[t]
            need = k - n_chosen
            if need == 0 or s.aborted:
                break
            if not (cv[v >> 6] >> (v & 63)) & 1:
                continue
            cv[v >> 6] &= ~((<uint64_t>1) << (v & 63))
            row = s.adj + v * nb
            for b in range(nb):
                sv[b] = cv[b] & row[b]
            if _count(&sv[0], nb) < need - 1:
                continue
            feasible = True
            if need > 1:
                s.best_size = need - 2
                s.stop_at = need - 1
                s.done = False
                s.depth = 0
                _expand(&s, &sv[0])
                feasible = s.best_size >= need - 1 and not s.aborted
                # _expand consumed its candidate set
                for b in range(nb):
                    sv[b] = cv[b] & row[b]
            if feasible:
                ch[n_chosen] = v
                n_chosen += 1
                for b in range(nb):
                    cv[b] = sv[b]
    nodes = min(s.nodes, budget)
    complete = not s.aborted
    free(s.stack)
    free(s.best)
    if not complete:
        return None, nodes, False
    if n_chosen < k:
        return None, nodes, True
    return [int(x) for x in chosen], nodes, True
