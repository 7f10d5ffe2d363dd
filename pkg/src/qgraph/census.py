"""All graphs on n vertices up to isomorphism, for exhaustive small-graph sweeps.

Classes on n vertices are produced by attaching a new vertex to every class
on n-1 vertices in all 2^(n-1) ways, then removing duplicates: candidates are
bucketed by a refinement invariant and compared with ``find_isomorphism``
inside a bucket. Every graph on n vertices arises this way (delete any
vertex), so the list is complete. Counts: 1, 1, 2, 4, 11, 34, 156, 1044, 12346.
"""
from __future__ import annotations

from functools import lru_cache

from .graphcore import Graph, iter_bits, popcount
from .permgroups import find_isomorphism


def _invariant(g: Graph) -> tuple:
    tri = []
    for v in range(g.n):
        nb = g.adj[v]
        tri.append(sum(popcount(g.adj[u] & nb) for u in iter_bits(nb)) // 2)
    colours = [(popcount(g.adj[v]), tri[v]) for v in range(g.n)]
    for _ in range(3):
        colours = [(colours[v], tuple(sorted(colours[u] for u in iter_bits(g.adj[v])))) for v in range(g.n)]
    return (g.n, g.num_edges, tuple(sorted(colours)))


@lru_cache(maxsize=None)
def graphs_up_to_iso(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0, ()),)
    buckets: dict[tuple, list[Graph]] = {}
    out: list[Graph] = []
    for base in graphs_up_to_iso(n - 1):
        for nb in range(1 << (n - 1)):
            rows = [row | (((nb >> v) & 1) << (n - 1)) for v, row in enumerate(base.adj)]
            rows.append(nb)
            g = Graph(n, tuple(rows))
            key = _invariant(g)
            bucket = buckets.setdefault(key, [])
            if any(find_isomorphism(g, h) is not None for h in bucket):
                continue
            bucket.append(g)
            out.append(g)
    return tuple(out)


def all_graphs_up_to(n: int) -> list[Graph]:
    """Isomorphism-class representatives for every order 1..n."""
    return [g for k in range(1, n + 1) for g in graphs_up_to_iso(k)]
