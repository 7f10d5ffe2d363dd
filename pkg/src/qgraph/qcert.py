"""Exact projector certificates for quantum cocliques and quantum colourings.

Entries are real symmetric rational matrices (``RatMat``). Everything the
constructions here produce is a rank-one projector of an integer vector, an
identity or a zero matrix, so no complex arithmetic is needed.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .graphcore import CliquePartition, Graph, VectorSet, dot, from_edges
from .solvers import transversal_search


class CertificateError(ValueError):
    pass


class RatMat:
    __slots__ = ("rows", "nrows", "ncols", "_zero")

    def __init__(self, rows: Iterable[Iterable[int | Fraction]]):
        self.rows = tuple(tuple(Fraction(x) for x in r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise CertificateError("ragged matrix")
        self._zero = all(x == 0 for r in self.rows for x in r)

    @classmethod
    def zero(cls, n: int, m: int | None = None) -> "RatMat":
        return cls([[0] * (n if m is None else m) for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> "RatMat":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def is_zero(self) -> bool:
        return self._zero

    def __eq__(self, other) -> bool:
        return isinstance(other, RatMat) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return "RatMat(%s)" % [[str(x) for x in r] for r in self.rows]

    def __add__(self, other: "RatMat") -> "RatMat":
        if self.shape != other.shape:
            raise CertificateError("shape mismatch %s + %s" % (self.shape, other.shape))
        return RatMat([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "RatMat") -> "RatMat":
        return self + other.scale(-1)

    def scale(self, c) -> "RatMat":
        return RatMat([[c * x for x in r] for r in self.rows])

    def __matmul__(self, other: "RatMat") -> "RatMat":
        if self.ncols != other.nrows:
            raise CertificateError("shape mismatch %s @ %s" % (self.shape, other.shape))
        if self._zero or other._zero:
            return RatMat.zero(self.nrows, other.ncols)
        cols = list(zip(*other.rows))
        return RatMat([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows])

    def transpose(self) -> "RatMat":
        return RatMat(zip(*self.rows)) if self.rows else self

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(min(self.shape))), Fraction(0))

    def trace_inner(self, other: "RatMat") -> Fraction:
        """tr(A^T B); for symmetric A this is tr(AB)."""
        return sum((a * b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s)), Fraction(0))

    def is_symmetric(self) -> bool:
        return self.nrows == self.ncols and all(
            self.rows[i][j] == self.rows[j][i] for i in range(self.nrows) for j in range(i))

    def is_projector(self) -> bool:
        return self.is_symmetric() and self @ self == self

    def rank(self) -> int:
        m = [list(r) for r in self.rows]
        rank = 0
        for col in range(self.ncols):
            piv = next((i for i in range(rank, self.nrows) if m[i][col] != 0), None)
            if piv is None:
                continue
            m[rank], m[piv] = m[piv], m[rank]
            for i in range(rank + 1, self.nrows):
                if m[i][col] != 0:
                    f = m[i][col] / m[rank][col]
                    m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
            rank += 1
        return rank

    def apply(self, v: Sequence[int | Fraction]) -> tuple[Fraction, ...]:
        return tuple(sum((a * Fraction(b) for a, b in zip(r, v)), Fraction(0)) for r in self.rows)

    def to_json(self):
        if self._zero:
            return "zero"
        return [[{"num": x.numerator, "den": x.denominator} for x in r] for r in self.rows]

    @classmethod
    def from_json(cls, data, d: int) -> "RatMat":
        if data == "zero":
            return cls.zero(d)
        try:
            return cls([[Fraction(int(x["num"]), int(x["den"])) for x in r] for r in data])
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise CertificateError("malformed matrix entry: %s" % exc) from exc


def projector_from_vector(v: Sequence[int]) -> RatMat:
    nn = dot(v, v)
    if nn == 0:
        raise CertificateError("zero vector has no projector")
    return RatMat([[Fraction(a * b, nn) for b in v] for a in v])


@dataclass(frozen=True)
class Certificate:
    kind: str  # "coclique" or "coloring"
    d: int
    grid: tuple[tuple[RatMat, ...], ...]

    def __post_init__(self):
        if self.kind not in ("coclique", "coloring"):
            raise CertificateError("unknown certificate kind %r" % self.kind)
        widths = {len(r) for r in self.grid}
        if len(widths) > 1:
            raise CertificateError("ragged certificate grid")
        for row in self.grid:
            for e in row:
                if e.shape != (self.d, self.d):
                    raise CertificateError("entry of shape %s in a d=%d certificate" % (e.shape, self.d))

    @property
    def rows(self) -> int:
        return len(self.grid)

    @property
    def s(self) -> int:
        return len(self.grid[0]) if self.grid else 0

    def nonzero(self) -> list[tuple[int, int]]:
        return [(v, i) for v, row in enumerate(self.grid) for i, e in enumerate(row) if not e.is_zero()]

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "d": self.d,
            "s": self.s,
            "entries": [[e.to_json() for e in row] for row in self.grid],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Certificate":
        try:
            kind, d, entries = data["kind"], int(data["d"]), data["entries"]
        except (KeyError, TypeError, ValueError) as exc:
            raise CertificateError("malformed certificate JSON: %s" % exc) from exc
        grid = tuple(tuple(RatMat.from_json(e, d) for e in row) for row in entries)
        cert = cls(kind, d, grid)
        if "s" in data and int(data["s"]) != cert.s:
            raise CertificateError("declared s=%s but grid has %d columns" % (data["s"], cert.s))
        return cert


@dataclass
class Verdict:
    valid: bool
    violations: list[tuple] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.valid

    def conditions(self) -> set[str]:
        return {v[0] for v in self.violations}

    def to_dict(self) -> dict:
        return {"valid": self.valid, "violations": [list(v) for v in self.violations]}


def certificate_from_clique_partition(vs: VectorSet, cp: CliquePartition) -> Certificate:
    """Column j holds the projectors of the vectors in part j, zero elsewhere."""
    zero = RatMat.zero(vs.dim)
    where = {}
    for j, part in enumerate(cp.parts):
        vecs = [vs[v] for v in part]
        if len(vecs) != vs.dim or any(dot(a, b) for k, a in enumerate(vecs) for b in vecs[k + 1:]):
            raise CertificateError("part %d is not an orthogonal basis" % j)
        for v in part:
            if v in where:
                raise CertificateError("vertex %d lies in two parts" % v)
            where[v] = j
    grid = []
    for v in range(len(vs)):
        row = [zero] * len(cp.parts)
        if v in where:
            row[where[v]] = projector_from_vector(vs[v])
        grid.append(tuple(row))
    return Certificate("coclique", vs.dim, tuple(grid))


def classical_certificate(g: Graph, coclique: Sequence[int]) -> Certificate:
    """1x1 certificate: vertex coclique[t] holds the identity in column t."""
    if not g.is_coclique(coclique):
        raise CertificateError("vertex set is not a coclique")
    zero, one = RatMat.zero(1), RatMat.identity(1)
    col = {v: t for t, v in enumerate(coclique)}
    grid = tuple(tuple(one if col.get(v) == t else zero for t in range(len(coclique))) for v in range(g.n))
    return Certificate("coclique", 1, grid)


def coloring_certificate(g: Graph, colouring: Sequence[int]) -> Certificate:
    """1x1 colouring certificate of a classical proper colouring."""
    if len(colouring) != g.n or any(colouring[u] == colouring[v] for u, v in g.edges()):
        raise CertificateError("not a proper colouring")
    s = max(colouring) + 1 if colouring else 0
    zero, one = RatMat.zero(1), RatMat.identity(1)
    return Certificate("coloring", 1, tuple(tuple(one if colouring[v] == i else zero for i in range(s))
                                            for v in range(g.n)))


def verify(c: Certificate, g: Graph) -> Verdict:
    """Check every condition of the certificate's kind; list all violations.

    Violations are tuples ``(condition, *indices)`` with conditions
    ``symmetric``, ``idempotent``, ``column_sum`` / ``row_sum``,
    ``row_orthogonality``, ``cross_orthogonality`` (coclique) and
    ``edge_orthogonality`` (colouring).
    """
    if c.rows != g.n:
        raise CertificateError("certificate has %d rows for a graph on %d vertices" % (c.rows, g.n))
    out: list[tuple] = []
    ident = RatMat.identity(c.d)
    nz = [[i for i, e in enumerate(row) if not e.is_zero()] for row in c.grid]

    for v, i in c.nonzero():
        e = c.grid[v][i]
        if not e.is_symmetric():
            out.append(("symmetric", v, i))
        if e @ e != e:
            out.append(("idempotent", v, i))

    for v in range(g.n):
        for a, i in enumerate(nz[v]):
            for j in nz[v][a + 1:]:
                if not (c.grid[v][i] @ c.grid[v][j]).is_zero():
                    out.append(("row_orthogonality", v, i, j))

    if c.kind == "coclique":
        for i in range(c.s):
            total = RatMat.zero(c.d)
            for v in range(g.n):
                if not c.grid[v][i].is_zero():
                    total = total + c.grid[v][i]
            if total != ident:
                out.append(("column_sum", i))
        for u, v in g.edges():
            for i in nz[v]:
                for j in nz[u]:
                    if i != j and not (c.grid[v][i] @ c.grid[u][j]).is_zero():
                        out.append(("cross_orthogonality", v, i, u, j))
    else:
        for v in range(g.n):
            total = RatMat.zero(c.d)
            for i in nz[v]:
                total = total + c.grid[v][i]
            if total != ident:
                out.append(("row_sum", v))
        for u, v in g.edges():
            for i in set(nz[u]) & set(nz[v]):
                if not (c.grid[u][i] @ c.grid[v][i]).is_zero():
                    out.append(("edge_orthogonality", u, v, i))
    return Verdict(not out, out)


def drop_column(c: Certificate, j: int) -> Certificate:
    if not 0 <= j < c.s:
        raise CertificateError("column %d out of range for s=%d" % (j, c.s))
    if c.s < 2:
        raise CertificateError("cannot drop the only column")
    return Certificate(c.kind, c.d, tuple(row[:j] + row[j + 1:] for row in c.grid))


@dataclass(frozen=True)
class EntriesGraph:
    graph: Graph
    entries: tuple[tuple[int, int], ...]   # vertex k of graph is grid entry entries[k] = (row, col)
    cliques: tuple[tuple[int, ...], ...]   # one group per column (coclique) or row (colouring)


def entries_orthogonality_graph(c: Certificate, by: str | None = None) -> EntriesGraph:
    """Orthogonality graph of the nonzero entries under the trace inner product.

    Zero entries are left out. The returned cliques group the entries by
    column for coclique certificates and by row for colouring certificates
    (``by`` overrides this).
    """
    by = by or ("column" if c.kind == "coclique" else "row")
    entries = tuple(sorted(c.nonzero(), key=(lambda e: (e[1], e[0])) if by == "column" else None))
    mats = [c.grid[v][i] for v, i in entries]
    edges = [(a, b) for a in range(len(mats)) for b in range(a + 1, len(mats))
             if mats[a].trace_inner(mats[b]) == 0]
    g = from_edges(len(mats), edges, ["P[%d,%d]" % e for e in entries])
    groups: dict[int, list[int]] = {}
    for k, (v, i) in enumerate(entries):
        groups.setdefault(i if by == "column" else v, []).append(k)
    span = c.s if by == "column" else c.rows
    cliques = tuple(tuple(groups.get(x, ())) for x in range(span))
    return EntriesGraph(g, entries, cliques)


@dataclass(frozen=True)
class GapResult:
    kochen_specker: bool
    witness: list[int] | dict[int, int] | None

    def to_dict(self) -> dict:
        w = self.witness
        if isinstance(w, dict):
            w = {str(k): x for k, x in w.items()}
        return {"verdict": "projective-KS" if self.kochen_specker else "classical", "witness": w}


def alpha_gap_witness(g: Graph, c: Certificate) -> GapResult:
    """Either a classical coclique of size s or the projective Kochen-Specker verdict.

    Looks for one entry per column, pairwise non-orthogonal; the rows of such
    a transversal form a coclique of g of size s.
    """
    if c.kind != "coclique":
        raise CertificateError("need a coclique certificate")
    verdict = verify(c, g)
    if not verdict:
        raise CertificateError("invalid certificate: %s" % verdict.violations[:5])
    eg = entries_orthogonality_graph(c, "column")
    t = transversal_search(eg.graph, eg.cliques)
    if t is None:
        return GapResult(True, None)
    coclique = sorted(eg.entries[k][0] for k in t)
    if len(set(coclique)) != c.s or not g.is_coclique(coclique):  # pragma: no cover - theorem violation
        raise AssertionError("transversal did not map to a coclique")
    return GapResult(False, coclique)


def chromatic_gap_witness(g: Graph, c: Certificate) -> GapResult:
    """Either a classical s-colouring or the projective Kochen-Specker verdict.

    Cliques are the rows of a colouring certificate; a transversal picks one
    entry per vertex and its column index is that vertex's colour.
    """
    if c.kind != "coloring":
        raise CertificateError("need a colouring certificate")
    verdict = verify(c, g)
    if not verdict:
        raise CertificateError("invalid certificate: %s" % verdict.violations[:5])
    eg = entries_orthogonality_graph(c, "row")
    t = transversal_search(eg.graph, eg.cliques)
    if t is None:
        return GapResult(True, None)
    colouring = {eg.entries[k][0]: eg.entries[k][1] for k in t}
    if any(colouring[u] == colouring[v] for u, v in g.edges()):  # pragma: no cover
        raise AssertionError("transversal did not map to a proper colouring")
    return GapResult(False, colouring)


def g_map(v: Sequence[int]) -> RatMat:
    return projector_from_vector(v)


def h_map(p: RatMat) -> tuple[Fraction, ...]:
    """P e_k for the first standard basis vector e_k that P does not annihilate."""
    for k in range(p.ncols):
        col = tuple(r[k] for r in p.rows)
        if any(col):
            return col
    raise CertificateError("zero matrix has no image")
