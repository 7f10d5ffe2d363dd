"""Projective points of F_p^3 and the Erdos-Renyi orthogonality graphs."""
from __future__ import annotations

from dataclasses import dataclass

from .graphcore import Graph, GraphError, _is_prime, cone, dot, orthogonality_graph, vector_set


@dataclass(frozen=True)
class FpVec:
    p: int
    coords: tuple[int, int, int]

    def __post_init__(self):
        if not any(self.coords) or any(not 0 <= c < self.p for c in self.coords):
            raise ValueError("bad residue vector %r mod %d" % (self.coords, self.p))


def check_odd_prime(p: int) -> None:
    if not isinstance(p, int) or p < 3 or not _is_prime(p):
        raise GraphError("p must be an odd prime, got %r" % (p,))


def projective_points(p: int) -> list[FpVec]:
    """Representatives with first nonzero coordinate 1, in lexicographic order."""
    check_odd_prime(p)
    pts = [(0, 0, 1)]
    pts += [(0, 1, a) for a in range(p)]
    pts += [(1, a, b) for a in range(p) for b in range(p)]
    return [FpVec(p, c) for c in pts]


def symmetric_lift(v: FpVec) -> tuple[int, int, int]:
    half = (v.p - 1) // 2
    return tuple(e - v.p if e > half else e for e in v.coords)


def is_self_orthogonal(v: FpVec) -> bool:
    return dot(v.coords, v.coords) % v.p == 0


def absolute_points(p: int) -> list[int]:
    """Indices of self-orthogonal representatives; these carry no loop in er_graph."""
    return [i for i, v in enumerate(projective_points(p)) if is_self_orthogonal(v)]


def _labels(points: list[FpVec]) -> list[str]:
    return ["[%d,%d,%d]" % v.coords for v in points]


def er_graph(p: int) -> Graph:
    pts = projective_points(p)
    return orthogonality_graph(vector_set([v.coords for v in pts], _labels(pts)), modulus=p)


def er_prime_vectors(p: int):
    pts = projective_points(p)
    return vector_set([symmetric_lift(v) for v in pts], _labels(pts))


def er_prime_graph(p: int) -> Graph:
    return orthogonality_graph(er_prime_vectors(p))


def small_entry_vertices(p: int) -> list[int]:
    """Vertices of ER'(p) whose lifted coordinates all lie in {0, 1, -1}."""
    return [i for i, v in enumerate(er_prime_vectors(p).vectors) if all(abs(x) <= 1 for x in v)]


def g13() -> Graph:
    return er_prime_graph(3)


def g14() -> Graph:
    return cone(g13())
