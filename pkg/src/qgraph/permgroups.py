"""Permutations of {1..n}, Cayley graphs and isomorphism checks.

Composition is right-to-left: ``compose(a, b)`` applies ``b`` first, so
``compose(a, b)(x) == a(b(x))``.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graphcore import Graph, GraphError, iter_bits, popcount


class PermError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Perm:
    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(1, len(self.image) + 1)):
            raise PermError("not a permutation of 1..%d: %r" % (len(self.image), self.image))

    @property
    def degree(self) -> int:
        return len(self.image)

    def __call__(self, x: int) -> int:
        return self.image[x - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        return compose(self, other)

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its minimum, in ascending order of minima."""
        seen = set()
        out = []
        for s in range(1, self.degree + 1):
            if s in seen:
                continue
            cyc = [s]
            seen.add(s)
            x = self(s)
            while x != s:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def is_identity(self) -> bool:
        return all(x == i + 1 for i, x in enumerate(self.image))

    def __str__(self) -> str:
        cs = self.cycles()
        if not cs:
            return "()"
        sep = "," if self.degree > 9 else ""
        return "".join("(" + sep.join(map(str, c)) + ")" for c in cs)

    def __repr__(self) -> str:
        return "Perm(%s)" % self


def identity(n: int) -> Perm:
    return Perm(tuple(range(1, n + 1)))


def compose(a: Perm, b: Perm) -> Perm:
    if a.degree != b.degree:
        raise PermError("degree mismatch: %d vs %d" % (a.degree, b.degree))
    return Perm(tuple(a.image[x - 1] for x in b.image))


def inverse(a: Perm) -> Perm:
    inv = [0] * a.degree
    for i, x in enumerate(a.image):
        inv[x - 1] = i + 1
    return Perm(tuple(inv))


def order(a: Perm) -> int:
    k, p = 1, a
    while not p.is_identity():
        p = compose(p, a)
        k += 1
    return k


def transposition(a: int, b: int, n: int) -> Perm:
    img = list(range(1, n + 1))
    img[a - 1], img[b - 1] = b, a
    return Perm(tuple(img))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int) -> Perm:
    """Parse disjoint-cycle notation such as ``"(12)(34)"`` or ``"(1,10)"``.

    ``"()"`` and ``"(1)"`` are the identity. Without commas every digit is a
    separate point, which covers degrees up to 9.
    """
    text = text.strip()
    if not text or _CYCLE_RE.sub("", text).strip():
        raise PermError("bad cycle notation: %r" % text)
    img = list(range(1, n + 1))
    used = set()
    for body in _CYCLE_RE.findall(text):
        body = body.strip()
        if not body:
            continue
        pts = [int(t) for t in re.split(r"[,\s]+", body)] if ("," in body or " " in body) else [int(c) for c in body]
        for p in pts:
            if not 1 <= p <= n or p in used:
                raise PermError("bad point %d in %r" % (p, text))
            used.add(p)
        for i, p in enumerate(pts):
            img[p - 1] = pts[(i + 1) % len(pts)]
    return Perm(tuple(img))


def all_perms(n: int) -> list[Perm]:
    """Elements of S_n in lexicographic one-line order."""
    return [Perm(p) for p in itertools.permutations(range(1, n + 1))]


def involutions(n: int) -> frozenset[Perm]:
    if n < 2:
        raise PermError("need n >= 2")
    e = identity(n)
    return frozenset(p for p in all_perms(n) if p != e and compose(p, p) == e)


def transpositions(n: int) -> frozenset[Perm]:
    return frozenset(transposition(a, b, n) for a in range(1, n + 1) for b in range(a + 1, n + 1))


def validate_connection_set(n: int, conn: Iterable[Perm]) -> frozenset[Perm]:
    cs = frozenset(conn)
    for c in cs:
        if c.degree != n:
            raise PermError("connection set element %s has wrong degree" % c)
        if c.is_identity():
            raise PermError("connection set contains the identity")
        if inverse(c) not in cs:
            raise PermError("connection set not inverse-closed at %s" % c)
    return cs


def cayley_graph(n: int, conn: Iterable[Perm]) -> Graph:
    """Cay(S_n, conn): g ~ h iff h g^-1 is in ``conn``; vertices in lexicographic order."""
    cs = validate_connection_set(n, conn)
    elems = all_perms(n)
    index = {p: i for i, p in enumerate(elems)}
    rows = [0] * len(elems)
    for i, g in enumerate(elems):
        for c in cs:
            rows[i] |= 1 << index[compose(c, g)]
    return Graph(len(elems), tuple(rows), tuple(str(p) for p in elems))


def right_translation(n: int, a: Perm) -> list[int]:
    """Vertex map g -> g a on the lexicographic Cayley vertex order."""
    elems = all_perms(n)
    index = {p: i for i, p in enumerate(elems)}
    return [index[compose(g, a)] for g in elems]


def verify_isomorphism(g: Graph, h: Graph, bijection: Sequence[int]) -> bool:
    f = list(bijection)
    if len(f) != g.n or sorted(f) != list(range(h.n)):
        raise GraphError("map is not a bijection onto the vertices of the target")
    if g.n != h.n:
        return False
    for u in range(g.n):
        image_row = 0
        for v in iter_bits(g.adj[u]):
            image_row |= 1 << f[v]
        if image_row != h.adj[f[u]]:
            return False
    return True


def _refine(g: Graph, rounds: int = 3) -> list[int]:
    """Colour classes by iterated degree / neighbour-colour multisets (shared palette)."""
    colours = [popcount(r) for r in g.adj]
    for _ in range(rounds):
        colours = [hash((colours[v], tuple(sorted(colours[u] for u in iter_bits(g.adj[v]))))) for v in range(g.n)]
    return colours


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """Backtracking search for an isomorphism g -> h, or None.

    Vertices are first split by iterated degree refinement computed with the
    same colour function on both graphs; the search then maps vertices of g
    in an order that keeps each new vertex attached to already-mapped ones,
    checking adjacency to every mapped vertex.
    """
    if g.n != h.n or sorted(g.degrees()) != sorted(h.degrees()):
        return None
    n = g.n
    if n == 0:
        return []
    cg, ch = _refine(g), _refine(h)
    if sorted(cg) != sorted(ch):
        return None
    by_colour: dict[int, list[int]] = {}
    for v, c in enumerate(ch):
        by_colour.setdefault(c, []).append(v)
    class_size = {c: len(vs) for c, vs in by_colour.items()}

    # rarest colour first, then grow along edges
    order: list[int] = []
    placed = 0
    while len(order) < n:
        frontier = [v for v in range(n) if not (placed >> v) & 1]
        v = min(frontier, key=lambda x: (-popcount(g.adj[x] & placed), class_size[cg[x]], x))
        order.append(v)
        placed |= 1 << v

    mapping = [-1] * n
    used = 0
    nodes = 0

    def extend(k: int) -> bool:
        nonlocal used, nodes
        if k == n:
            return True
        v = order[k]
        mapped_nb = 0  # images of already-mapped neighbours of v
        mapped_all = 0
        for u in order[:k]:
            mapped_all |= 1 << mapping[u]
            if g.has_edge(v, u):
                mapped_nb |= 1 << mapping[u]
        for w in by_colour[cg[v]]:
            if (used >> w) & 1:
                continue
            nodes += 1
            if h.adj[w] & mapped_all != mapped_nb:
                continue
            mapping[v] = w
            used |= 1 << w
            if extend(k + 1):
                return True
            used &= ~(1 << w)
            mapping[v] = -1
        return False

    if extend(0):
        assert verify_isomorphism(g, h, mapping)
        return mapping
    return None


def isomorphism_from_table(g_labels: Sequence[str], h_labels: Sequence[str], table: dict[str, str]) -> list[int]:
    """Translate a label->label table into an index map."""
    hpos = {lab: i for i, lab in enumerate(h_labels)}
    return [hpos[table[lab]] for lab in g_labels]
