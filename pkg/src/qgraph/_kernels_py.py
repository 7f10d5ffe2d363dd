"""Pure-Python search kernels.

Mirror of the compiled ``_kernels`` module: same algorithms, same visiting
order, so both return identical values, witnesses and node counts.
Adjacency is a list of int bitsets. ``node_limit`` and ``time_limit`` of 0
mean unlimited; a search that hits either returns ``complete=False``.
"""
from __future__ import annotations

import time


def _time_check(start, time_limit):
    return time_limit > 0 and time.perf_counter() - start > time_limit


def mis_search(adj, n, node_limit=0, time_limit=0.0):
    """Maximum independent set by branch and bound.

    Returns ``(size, witness, nodes, complete)``. Vertices are renumbered by
    ascending degree (ties by index); the bound at every node is a greedy
    clique cover of the candidate set in that order.
    """
    order = sorted(range(n), key=lambda v: (bin(adj[v]).count("1"), v))
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    radj = [0] * n
    for i, v in enumerate(order):
        row = 0
        x = adj[v]
        while x:
            low = x & -x
            row |= 1 << pos[low.bit_length() - 1]
            x ^= low
        radj[i] = row
    full = (1 << n) - 1
    nonadj = [full & ~radj[i] & ~(1 << i) for i in range(n)]

    best_size = 0
    best_set = []
    current = []
    nodes = 0
    start = time.perf_counter()
    aborted = False

    def expand(P, size):
        nonlocal best_size, best_set, nodes, aborted
        nodes += 1
        if (node_limit and nodes > node_limit) or ((nodes & 1023) == 0 and _time_check(start, time_limit)):
            aborted = True
            return
        # greedy clique cover of P: vertices in cover order with their clique index
        cov_v = []
        cov_k = []
        U = P
        k = 0
        while U:
            k += 1
            Q = U
            while Q:
                low = Q & -Q
                v = low.bit_length() - 1
                Q &= radj[v]
                U ^= low
                cov_v.append(v)
                cov_k.append(k)
        for idx in range(len(cov_v) - 1, -1, -1):
            if size + cov_k[idx] <= best_size:
                return
            v = cov_v[idx]
            newP = P & nonadj[v]
            current.append(v)
            if newP:
                expand(newP, size + 1)
                if aborted:
                    return
            elif size + 1 > best_size:
                best_size = size + 1
                best_set = list(current)
            current.pop()
            P &= ~(1 << v)

    if n:
        expand(full, 0)
    return best_size, sorted(order[v] for v in best_set), nodes, not aborted


def color_search(adj, n, k, node_limit=0, time_limit=0.0):
    """Decide k-colourability by DSATUR backtracking.

    Returns ``(coloring or None, nodes, complete)``. Vertex choice: highest
    saturation, then highest degree, then lowest index. Colours are tried in
    ascending order and at most one previously unused colour is opened.
    """
    deg = [bin(adj[v]).count("1") for v in range(n)]
    nbrs = []
    for v in range(n):
        x = adj[v]
        lst = []
        while x:
            low = x & -x
            lst.append(low.bit_length() - 1)
            x ^= low
        nbrs.append(lst)
    colour = [-1] * n
    forbid = [[0] * k for _ in range(n)]
    sat = [0] * n
    nodes = 0
    start = time.perf_counter()
    aborted = False

    def assign(v, c, delta):
        for u in nbrs[v]:
            f = forbid[u]
            if delta > 0:
                if f[c] == 0:
                    sat[u] += 1
                f[c] += 1
            else:
                f[c] -= 1
                if f[c] == 0:
                    sat[u] -= 1

    def solve(ncol, used):
        nonlocal nodes, aborted
        if ncol == n:
            return True
        nodes += 1
        if (node_limit and nodes > node_limit) or ((nodes & 1023) == 0 and _time_check(start, time_limit)):
            aborted = True
            return False
        best = -1
        for v in range(n):
            if colour[v] < 0 and (
                best < 0 or sat[v] > sat[best] or (sat[v] == sat[best] and deg[v] > deg[best])
            ):
                best = v
        v = best
        top = used + 1 if used < k else k
        f = forbid[v]
        for c in range(top):
            if f[c]:
                continue
            colour[v] = c
            assign(v, c, 1)
            if solve(ncol + 1, used + 1 if c == used else used):
                return True
            assign(v, c, -1)
            colour[v] = -1
            if aborted:
                return False
        return False

    if k <= 0:
        return (None if n else []), 0, True
    ok = solve(0, 0)
    return (list(colour) if ok else None), nodes, not aborted
