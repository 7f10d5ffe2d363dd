# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels (multi-word uint64 bitsets).

Same algorithms and visiting order as ``_kernels_py``; results are identical.
"""
from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memcpy
import time


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int _lowest(const uint64_t* s, int W) noexcept nogil:
    cdef int w
    for w in range(W):
        if s[w]:
            return w * 64 + __builtin_ctzll(s[w])
    return -1


cdef inline bint _empty(const uint64_t* s, int W) noexcept nogil:
    cdef int w
    for w in range(W):
        if s[w]:
            return False
    return True


cdef inline void _clear(uint64_t* s, int v) noexcept nogil:
    s[v >> 6] &= ~((<uint64_t>1) << (v & 63))


cdef void _to_words(object row, uint64_t* out, int W):
    cdef int w
    for w in range(W):
        out[w] = <uint64_t>((row >> (64 * w)) & 0xFFFFFFFFFFFFFFFF)


cdef struct MisState:
    int n
    int W
    uint64_t* radj
    uint64_t* nonadj
    uint64_t* pbuf       # (n+2) * W
    uint64_t* ubuf       # W scratch
    uint64_t* qbuf       # W scratch
    int* cov_v           # (n+2) * n
    int* cov_k
    int* current
    int* best_set
    int best_size
    long long nodes
    long long node_limit
    double time_limit
    double start
    bint aborted


cdef double _now() noexcept:
    return time.perf_counter()


cdef void _expand(MisState* st, int depth, int size) noexcept:
    cdef int W = st.W, n = st.n
    cdef uint64_t* P = st.pbuf + depth * W
    cdef uint64_t* newP = st.pbuf + (depth + 1) * W
    cdef uint64_t* U = st.ubuf
    cdef uint64_t* Q = st.qbuf
    cdef int* cv = st.cov_v + depth * n
    cdef int* ck = st.cov_k + depth * n
    cdef int m = 0, k = 0, v, w, idx, i
    cdef bint nonempty
    st.nodes += 1
    if st.node_limit and st.nodes > st.node_limit:
        st.aborted = True
        return
    if (st.nodes & 1023) == 0 and st.time_limit > 0 and _now() - st.start > st.time_limit:
        st.aborted = True
        return
    memcpy(U, P, W * sizeof(uint64_t))
    while not _empty(U, W):
        k += 1
        memcpy(Q, U, W * sizeof(uint64_t))
        while True:
            v = _lowest(Q, W)
            if v < 0:
                break
            for w in range(W):
                Q[w] &= st.radj[v * W + w]
            _clear(U, v)
            cv[m] = v
            ck[m] = k
            m += 1
    for idx in range(m - 1, -1, -1):
        if size + ck[idx] <= st.best_size:
            return
        v = cv[idx]
        nonempty = False
        for w in range(W):
            newP[w] = P[w] & st.nonadj[v * W + w]
            if newP[w]:
                nonempty = True
        st.current[size] = v
        if nonempty:
            _expand(st, depth + 1, size + 1)
            if st.aborted:
                return
        elif size + 1 > st.best_size:
            st.best_size = size + 1
            for i in range(size + 1):
                st.best_set[i] = st.current[i]
        _clear(P, v)


def mis_search(adj, int n, long long node_limit=0, double time_limit=0.0):
    cdef int W = (n + 63) // 64 if n > 0 else 1
    cdef MisState st
    cdef int i, w
    order = sorted(range(n), key=lambda v: (bin(adj[v]).count("1"), v))
    pos = [0] * n
    for idx, v in enumerate(order):
        pos[v] = idx
    st.n = n
    st.W = W
    st.radj = <uint64_t*>calloc(n * W + 1, sizeof(uint64_t))
    st.nonadj = <uint64_t*>calloc(n * W + 1, sizeof(uint64_t))
    st.pbuf = <uint64_t*>calloc((n + 2) * W, sizeof(uint64_t))
    st.ubuf = <uint64_t*>calloc(W, sizeof(uint64_t))
    st.qbuf = <uint64_t*>calloc(W, sizeof(uint64_t))
    st.cov_v = <int*>calloc((n + 2) * n + 1, sizeof(int))
    st.cov_k = <int*>calloc((n + 2) * n + 1, sizeof(int))
    st.current = <int*>calloc(n + 1, sizeof(int))
    st.best_set = <int*>calloc(n + 1, sizeof(int))
    try:
        one = 1
        full = (one << n) - 1
        for i in range(n):
            row = 0
            x = adj[order[i]]
            while x:
                low = x & -x
                row |= one << pos[low.bit_length() - 1]
                x ^= low
            _to_words(row, st.radj + i * W, W)
            _to_words(full & ~row & ~(one << i), st.nonadj + i * W, W)
        _to_words(full, st.pbuf, W)
        st.best_size = 0
        st.nodes = 0
        st.node_limit = node_limit
        st.time_limit = time_limit
        st.start = _now()
        st.aborted = False
        if n:
            _expand(&st, 0, 0)
        witness = sorted(order[st.best_set[i]] for i in range(st.best_size))
        return st.best_size, witness, st.nodes, not st.aborted
    finally:
        free(st.radj); free(st.nonadj); free(st.pbuf); free(st.ubuf); free(st.qbuf)
        free(st.cov_v); free(st.cov_k); free(st.current); free(st.best_set)


cdef struct ColState:
    int n
    int k
    int* colour
    int* forbid        # n * k
    int* sat
    int* deg
    int* nb_start      # n + 1
    int* nb            # 2|E|
    long long nodes
    long long node_limit
    double time_limit
    double start
    bint aborted


cdef inline void _assign(ColState* st, int v, int c, int delta) noexcept:
    cdef int t, u
    for t in range(st.nb_start[v], st.nb_start[v + 1]):
        u = st.nb[t]
        if delta > 0:
            if st.forbid[u * st.k + c] == 0:
                st.sat[u] += 1
            st.forbid[u * st.k + c] += 1
        else:
            st.forbid[u * st.k + c] -= 1
            if st.forbid[u * st.k + c] == 0:
                st.sat[u] -= 1


cdef bint _solve(ColState* st, int ncol, int used) noexcept:
    cdef int n = st.n, k = st.k, v, best, c, top
    if ncol == n:
        return True
    st.nodes += 1
    if st.node_limit and st.nodes > st.node_limit:
        st.aborted = True
        return False
    if (st.nodes & 1023) == 0 and st.time_limit > 0 and _now() - st.start > st.time_limit:
        st.aborted = True
        return False
    best = -1
    for v in range(n):
        if st.colour[v] < 0 and (
            best < 0 or st.sat[v] > st.sat[best]
            or (st.sat[v] == st.sat[best] and st.deg[v] > st.deg[best])
        ):
            best = v
    v = best
    top = used + 1 if used < k else k
    for c in range(top):
        if st.forbid[v * k + c]:
            continue
        st.colour[v] = c
        _assign(st, v, c, 1)
        if _solve(st, ncol + 1, used + 1 if c == used else used):
            return True
        _assign(st, v, c, -1)
        st.colour[v] = -1
        if st.aborted:
            return False
    return False


def color_search(adj, int n, int k, long long node_limit=0, double time_limit=0.0):
    cdef ColState st
    cdef int v, t, total
    if k <= 0:
        return (None if n else []), 0, True
    nbrs = []
    for v in range(n):
        x = adj[v]
        lst = []
        while x:
            low = x & -x
            lst.append(low.bit_length() - 1)
            x ^= low
        nbrs.append(lst)
    total = sum(len(l) for l in nbrs)
    st.n = n
    st.k = k
    st.colour = <int*>malloc((n + 1) * sizeof(int))
    st.forbid = <int*>calloc(n * k + 1, sizeof(int))
    st.sat = <int*>calloc(n + 1, sizeof(int))
    st.deg = <int*>calloc(n + 1, sizeof(int))
    st.nb_start = <int*>calloc(n + 2, sizeof(int))
    st.nb = <int*>calloc(total + 1, sizeof(int))
    try:
        t = 0
        for v in range(n):
            st.colour[v] = -1
            st.deg[v] = len(nbrs[v])
            st.nb_start[v] = t
            for u in nbrs[v]:
                st.nb[t] = u
                t += 1
        st.nb_start[n] = t
        st.nodes = 0
        st.node_limit = node_limit
        st.time_limit = time_limit
        st.start = _now()
        st.aborted = False
        ok = _solve(&st, 0, 0)
        colouring = [st.colour[v] for v in range(n)] if ok else None
        return colouring, st.nodes, not st.aborted
    finally:
        free(st.colour); free(st.forbid); free(st.sat); free(st.deg); free(st.nb_start); free(st.nb)
