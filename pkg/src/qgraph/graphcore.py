"""Finite simple graphs stored as per-vertex neighbour bitsets.

Vertices are dense 0-based indices. Adjacency rows are Python ints used as
bitsets, so ``(g.adj[u] >> v) & 1`` tests an edge.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    pass


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError("adjacency has %d rows for %d vertices" % (len(self.adj), self.n))
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError("row %d has bits outside range" % v)
            if (row >> v) & 1:
                raise GraphError("loop at vertex %d" % v)
            for u in iter_bits(row):
                if not (self.adj[u] >> v) & 1:
                    raise GraphError("asymmetric edge %d-%d" % (v, u))
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("labels length mismatch")

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(r) for r in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])

    def is_coclique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        if len(set(vs)) != len(vs):
            return False
        mask = 0
        for v in vs:
            mask |= 1 << v
        return all(not (self.adj[v] & mask) for v in vs)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(self.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(self.adj)), self.labels)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph whose vertex ``perm[v]`` plays the role of ``v``."""
        rows = [0] * self.n
        for u, v in self.edges():
            a, b = perm[u], perm[v]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return Graph(self.n, tuple(rows))


@dataclass(frozen=True)
class VectorSet:
    dim: int
    vectors: tuple[tuple[int, ...], ...]
    tags: tuple[str, ...] | None = None

    def __post_init__(self):
        for v in self.vectors:
            if len(v) != self.dim:
                raise GraphError("vector %r does not have dimension %d" % (v, self.dim))
            if not any(v):
                raise GraphError("zero vector in vector set")

    def __len__(self) -> int:
        return len(self.vectors)

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.vectors[i]


def vector_set(vectors: Iterable[Sequence[int]], tags: Sequence[str] | None = None) -> VectorSet:
    vs = tuple(tuple(v) for v in vectors)
    if not vs:
        raise GraphError("empty vector set")
    return VectorSet(len(vs[0]), vs, tuple(tags) if tags is not None else None)


@dataclass(frozen=True)
class CliquePartition:
    parts: tuple[tuple[int, ...], ...]
    d: int

    @classmethod
    def of(cls, parts: Iterable[Iterable[int]]) -> "CliquePartition":
        ps = tuple(tuple(p) for p in parts)
        return cls(ps, len(ps[0]) if ps else 0)


def from_edges(n: int, edges: Iterable[Sequence[int]], labels: Sequence[str] | None = None) -> Graph:
    rows = [0] * n
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError("edge (%d, %d) out of range for n=%d" % (u, v, n))
        if u == v:
            raise GraphError("loop edge at %d" % u)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows), tuple(labels) if labels is not None else None)


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def orthogonality_graph(vs: VectorSet, modulus: int | None = None) -> Graph:
    """Vertices are the vectors; edges join orthogonal pairs.

    With ``modulus=None`` the ordinary dot product over the rationals is used,
    otherwise the dot product is taken mod ``modulus`` (an odd prime).
    Self-orthogonal vectors never get loops.
    """
    if len(vs) == 0:
        raise GraphError("empty vector set")
    if modulus is not None and (modulus < 3 or modulus % 2 == 0 or not _is_prime(modulus)):
        raise GraphError("modulus must be an odd prime, got %r" % modulus)
    vecs = vs.vectors
    rows = [0] * len(vecs)
    for i, u in enumerate(vecs):
        for j in range(i + 1, len(vecs)):
            d = dot(u, vecs[j])
            if (d % modulus if modulus else d) == 0:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(len(vecs), tuple(rows), vs.tags)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def cone(g: Graph) -> Graph:
    apex = g.n
    rows = [row | (1 << apex) for row in g.adj]
    rows.append((1 << g.n) - 1)
    labels = None if g.labels is None else g.labels + ("apex",)
    return Graph(g.n + 1, tuple(rows), labels)


def components(g: Graph) -> list[list[int]]:
    seen = 0
    comps = []
    for s in range(g.n):
        if (seen >> s) & 1:
            continue
        comp, queue = [], deque([s])
        seen |= 1 << s
        while queue:
            v = queue.popleft()
            comp.append(v)
            fresh = g.adj[v] & ~seen
            seen |= fresh
            queue.extend(iter_bits(fresh))
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    if g.n < 1:
        raise GraphError("connectivity of the empty graph is undefined")
    return len(components(g)) == 1


def component_containing(g: Graph, v: int) -> Graph:
    for comp in components(g):
        if v in comp:
            return induced_subgraph(g, comp)
    raise GraphError("vertex %d out of range" % v)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    ks = sorted(set(keep))
    for v in ks:
        if not 0 <= v < g.n:
            raise GraphError("vertex %d out of range" % v)
    pos = {v: i for i, v in enumerate(ks)}
    rows = []
    for v in ks:
        rows.append(sum(1 << pos[u] for u in iter_bits(g.adj[v]) if u in pos))
    labels = None if g.labels is None else tuple(g.labels[v] for v in ks)
    return Graph(len(ks), tuple(rows), labels)


def verify_clique_partition(g: Graph, cp: CliquePartition) -> bool:
    seen = set()
    for part in cp.parts:
        if len(part) != cp.d:
            return False
        for v in part:
            if not 0 <= v < g.n or v in seen:
                return False
            seen.add(v)
        if not g.is_clique(part):
            return False
    return len(seen) == g.n


def is_transversal(cp: CliquePartition | Sequence[Sequence[int]], chosen: Iterable[int]) -> bool:
    """Exactly one chosen vertex in every part."""
    parts = cp.parts if isinstance(cp, CliquePartition) else cp
    cs = set(chosen)
    return all(len(cs.intersection(p)) == 1 for p in parts) and cs <= set().union(*map(set, parts))


# --- serialization ---------------------------------------------------------

def graph_to_dict(g: Graph) -> dict:
    out = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    if g.labels is not None:
        out["labels"] = list(g.labels)
    return out


def graph_from_dict(data: dict) -> Graph:
    try:
        n = int(data["n"])
        edges = [tuple(int(x) for x in e) for e in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError("malformed graph JSON: %s" % exc) from exc
    return from_edges(n, edges, data.get("labels"))


def vectors_to_dict(vs: VectorSet) -> dict:
    out = {"dim": vs.dim, "vectors": [list(v) for v in vs.vectors]}
    if vs.tags is not None:
        out["tags"] = list(vs.tags)
    return out


def vectors_from_dict(data: dict) -> VectorSet:
    try:
        dim = int(data["dim"])
        vecs = tuple(tuple(int(x) for x in v) for v in data["vectors"])
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError("malformed vector-set JSON: %s" % exc) from exc
    return VectorSet(dim, vecs, tuple(data["tags"]) if data.get("tags") else None)


def partition_to_dict(cp: CliquePartition) -> dict:
    return {"d": cp.d, "parts": [list(p) for p in cp.parts]}


def partition_from_dict(data: dict) -> CliquePartition:
    try:
        parts = tuple(tuple(int(v) for v in p) for p in data["parts"])
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError("malformed partition JSON: %s" % exc) from exc
    d = int(data.get("d", len(parts[0]) if parts else 0))
    return CliquePartition(parts, d)


def load_json(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise GraphError("malformed JSON in %s: %s" % (path, exc)) from exc


def to_dot(g: Graph, name: str = "G") -> str:
    lines = ["graph %s {" % name]
    for v in range(g.n):
        label = g.labels[v] if g.labels is not None else str(v)
        lines.append('  %d [label="%s"];' % (v, label.replace('"', r"\"")))
    for u, v in g.edges():
        lines.append("  %d -- %d;" % (u, v))
    lines.append("}")
    return "\n".join(lines) + "\n"


def adjacency_matrix(g: Graph) -> list[list[int]]:
    return [[(g.adj[u] >> v) & 1 for v in range(g.n)] for u in range(g.n)]


def is_parallel(u: Sequence[int], v: Sequence[int]) -> bool:
    """Exact parallelism test for integer vectors (Cauchy-Schwarz equality)."""
    return dot(u, v) ** 2 == dot(u, u) * dot(v, v)


def normalized_line(v: Sequence[int]) -> tuple[Fraction, ...]:
    """Canonical representative of the line through ``v``: first nonzero entry 1."""
    lead = next(x for x in v if x)
    return tuple(Fraction(x, lead) for x in v)
