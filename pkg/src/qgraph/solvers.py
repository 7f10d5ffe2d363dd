"""Exact classical parameters: independence number, chromatic number,
clique partitions and coclique transversals of clique partitions."""
from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from typing import Sequence

from ._backend import get_kernels
from .graphcore import CliquePartition, Graph, GraphError, iter_bits, popcount, verify_clique_partition


class BudgetExhausted(RuntimeError):
    """A search hit its node or time budget before it could prove a value."""

    def __init__(self, message: str, report: "SolveReport"):
        super().__init__(message)
        self.report = report


@dataclass
class SolveReport:
    value: int | None
    witness: list[int] | dict[int, int] | None
    nodes_explored: int
    elapsed: float
    status: str = "optimal"
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        w = self.witness
        if isinstance(w, dict):
            w = {str(k): v for k, v in w.items()}
        return {
            "value": self.value,
            "witness": w,
            "nodes_explored": self.nodes_explored,
            "elapsed": self.elapsed,
            "status": self.status,
            **self.extra,
        }


def default_time_limit() -> float:
    """Global wall-clock budget in seconds from QGRAPH_BUDGET_MS (0 = none)."""
    raw = os.environ.get("QGRAPH_BUDGET_MS", "")
    return int(raw) / 1000.0 if raw.strip() else 0.0


def _limits(node_limit, time_limit):
    return (node_limit or 0), (default_time_limit() if time_limit is None else time_limit)


def max_independent_set(g: Graph, node_limit: int | None = None, time_limit: float | None = None,
                        backend: str | None = None) -> SolveReport:
    nl, tl = _limits(node_limit, time_limit)
    kernels = get_kernels(backend)
    t0 = time.perf_counter()
    size, witness, nodes, complete = kernels.mis_search(list(g.adj), g.n, nl, tl)
    elapsed = time.perf_counter() - t0
    if not complete:
        rep = SolveReport(None, witness, nodes, elapsed, "budget_exhausted", {"lower_bound": size})
        raise BudgetExhausted("independence number search exhausted its budget (best so far %d)" % size, rep)
    assert len(witness) == size and g.is_coclique(witness)
    return SolveReport(size, witness, nodes, elapsed)


def independence_number(g: Graph, **kw) -> int:
    return max_independent_set(g, **kw).value


def greedy_clique(g: Graph) -> list[int]:
    """Clique grown from each vertex by highest-degree-first; the largest one found."""
    best: list[int] = []
    degs = g.degrees()
    for s in range(g.n):
        clique = [s]
        cand = g.adj[s]
        while cand:
            v = max(iter_bits(cand), key=lambda x: (popcount(g.adj[x] & cand), degs[x], -x))
            clique.append(v)
            cand &= g.adj[v]
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def dsatur_greedy(g: Graph) -> list[int]:
    n = g.n
    colour = [-1] * n
    degs = g.degrees()
    for _ in range(n):
        best, best_key = -1, None
        for v in range(n):
            if colour[v] >= 0:
                continue
            sat = len({colour[u] for u in iter_bits(g.adj[v]) if colour[u] >= 0})
            key = (sat, degs[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        taken = {colour[u] for u in iter_bits(g.adj[best])}
        c = 0
        while c in taken:
            c += 1
        colour[best] = c
    return colour


def is_proper_coloring(g: Graph, colouring: Sequence[int]) -> bool:
    return len(colouring) == g.n and all(colouring[u] != colouring[v] for u, v in g.edges())


def chromatic_number(g: Graph, ub_hint: int | None = None, node_limit: int | None = None,
                     time_limit: float | None = None, backend: str | None = None) -> SolveReport:
    """Exact chromatic number with a proper colouring as witness.

    Tries k = lower bound, lower bound + 1, ... with a DSATUR k-colourability
    search until one succeeds or k reaches the greedy upper bound.
    """
    nl, tl = _limits(node_limit, time_limit)
    kernels = get_kernels(backend)
    t0 = time.perf_counter()
    if g.n == 0:
        return SolveReport(0, {}, 0, 0.0)
    greedy = dsatur_greedy(g)
    best: list[int] | None = greedy
    ub = max(greedy) + 1
    if ub_hint is not None and ub_hint < ub:
        # the hint must itself be verified, so search up to and including it
        ub, best = ub_hint, None
    lb = len(greedy_clique(g))
    nodes = 0
    for k in range(lb, ub + (best is None)):
        remaining = max(tl - (time.perf_counter() - t0), 1e-9) if tl else 0.0
        colouring, used, complete = kernels.color_search(
            list(g.adj), g.n, k, max(nl - nodes, 1) if nl else 0, remaining)
        nodes += used
        if not complete:
            rep = SolveReport(None, None, nodes, time.perf_counter() - t0, "budget_exhausted", {"lower_bound": k})
            raise BudgetExhausted("chromatic search exhausted its budget at k=%d" % k, rep)
        if colouring is not None:
            best = colouring
            break
    if best is None:
        raise GraphError("ub_hint %d is below the chromatic number" % ub_hint)
    value = max(best) + 1
    assert is_proper_coloring(g, best)
    return SolveReport(value, {v: c for v, c in enumerate(best)}, nodes, time.perf_counter() - t0,
                       extra={"clique_lower_bound": lb})


def clique_partition(g: Graph, d: int) -> CliquePartition | None:
    """Partition V(g) into d-cliques by exact-cover backtracking.

    The uncovered vertex with the fewest usable d-cliques is covered next;
    cliques are tried in lexicographic order.
    """
    if d <= 0 or g.n % d:
        raise GraphError("part size %d does not divide %d" % (d, g.n))
    if g.n == 0:
        return CliquePartition((), d)
    cliques = _d_cliques(g, d)
    containing: list[list[int]] = [[] for _ in range(g.n)]
    masks = []
    for idx, c in enumerate(cliques):
        m = 0
        for v in c:
            m |= 1 << v
            containing[v].append(idx)
        masks.append(m)
    chosen: list[int] = []

    def search(covered: int) -> bool:
        if covered == (1 << g.n) - 1:
            return True
        best_v, best_opts = -1, None
        for v in range(g.n):
            if (covered >> v) & 1:
                continue
            opts = [i for i in containing[v] if not masks[i] & covered]
            if best_opts is None or len(opts) < len(best_opts):
                best_v, best_opts = v, opts
                if not opts:
                    return False
        for i in best_opts:
            chosen.append(i)
            if search(covered | masks[i]):
                return True
            chosen.pop()
        return False

    if not search(0):
        return None
    cp = CliquePartition(tuple(sorted(cliques[i] for i in chosen)), d)
    assert verify_clique_partition(g, cp)
    return cp


def _d_cliques(g: Graph, d: int) -> list[tuple[int, ...]]:
    out = []

    def grow(clique, cand):
        if len(clique) == d:
            out.append(tuple(clique))
            return
        for v in iter_bits(cand):
            grow(clique + [v], cand & g.adj[v] & ~((1 << (v + 1)) - 1))

    grow([], (1 << g.n) - 1)
    return out


def transversal_search(g: Graph, parts: Sequence[Sequence[int]]) -> list[int] | None:
    """A pairwise nonadjacent set meeting every part exactly once, or None.

    Backtracks over parts, always taking the part with the fewest vertices
    still compatible with the choices so far (lowest index on ties), and
    trying its vertices in ascending order.
    """
    pmask = []
    for p in parts:
        m = 0
        for v in p:
            m |= 1 << v
        pmask.append(m)
    chosen: list[int] = []

    def search(avail: int, remaining: list[int]):
        if not remaining:
            return True
        pick, fewest = -1, None
        for j in remaining:
            c = popcount(pmask[j] & avail)
            if fewest is None or c < fewest:
                pick, fewest = j, c
                if c == 0:
                    return False
        rest = [j for j in remaining if j != pick]
        for v in iter_bits(pmask[pick] & avail):
            chosen.append(v)
            if search(avail & ~g.adj[v] & ~pmask[pick] & ~(1 << v), rest):
                return True
            chosen.pop()
        return False

    if search((1 << g.n) - 1, list(range(len(parts)))):
        return sorted(chosen)
    return None


def ks_transversal_search(g: Graph, cp: CliquePartition) -> list[int] | None:
    """Coclique transversal of the partition; None means (g, cp) is Kochen-Specker."""
    if not verify_clique_partition(g, cp):
        raise GraphError("invalid clique partition")
    return transversal_search(g, cp.parts)
