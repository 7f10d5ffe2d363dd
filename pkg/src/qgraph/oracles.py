"""Exhaustive reference computations for small graphs.

Deliberately naive and independent of the search kernels.
"""
from __future__ import annotations

from .graphcore import Graph


def brute_force_alpha(g: Graph) -> int:
    best = 0
    for mask in range(1 << g.n):
        size = bin(mask).count("1")
        if size <= best:
            continue
        if all(not (g.adj[v] & mask) for v in range(g.n) if (mask >> v) & 1):
            best = size
    return best


def _set_partitions(n: int):
    """Restricted growth strings: block labels for vertices 0..n-1."""
    labels = [0] * n

    def rec(i, blocks):
        if i == n:
            yield list(labels), blocks
            return
        for b in range(blocks + 1):
            labels[i] = b
            yield from rec(i + 1, max(blocks, b + 1))

    if n == 0:
        yield [], 0
    else:
        yield from rec(0, 0)


def brute_force_chromatic(g: Graph) -> int:
    """Fewest blocks over all set partitions whose blocks are cocliques."""
    best = g.n
    for labels, blocks in _set_partitions(g.n):
        if blocks < best and all(labels[u] != labels[v] for u in range(g.n) for v in range(u + 1, g.n)
                                 if (g.adj[u] >> v) & 1):
            best = blocks
    return best


def brute_force_isomorphic(g: Graph, h: Graph) -> bool:
    from itertools import permutations

    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    eh = set(h.edges())
    for p in permutations(range(g.n)):
        if all((min(p[u], p[v]), max(p[u], p[v])) in eh for u, v in g.edges()):
            return True
    return False
