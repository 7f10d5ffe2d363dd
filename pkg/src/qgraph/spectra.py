"""Exact inertia of symmetric integer matrices via rational congruence.

No floating point is involved: the matrix is reduced by simultaneous
row/column operations (a congruence, so Sylvester's law keeps the inertia)
until it is block diagonal with 1x1 and 2x2 blocks.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graphcore import Graph, adjacency_matrix


@dataclass(frozen=True)
class Inertia:
    n_minus: int
    n_zero: int
    n_plus: int

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n_minus, self.n_zero, self.n_plus)

    @property
    def bound(self) -> int:
        return min(self.n_zero + self.n_minus, self.n_zero + self.n_plus)


def inertia(m: Sequence[Sequence[int | Fraction]]) -> Inertia:
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    for i in range(n):
        if len(a[i]) != n:
            raise ValueError("matrix is not square")
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric at (%d, %d)" % (i, j))

    neg = pos = 0
    active = list(range(n))
    while active:
        # largest |diagonal| pivot first
        piv = max(active, key=lambda k: abs(a[k][k]))
        if a[piv][piv] != 0:
            d = a[piv][piv]
            active.remove(piv)
            row = a[piv]
            for i in active:
                f = row[i] / d
                if f:
                    ai = a[i]
                    for j in active:
                        ai[j] -= f * row[j]
            if d > 0:
                pos += 1
            else:
                neg += 1
            continue
        # zero diagonal on the active block: find a nonzero off-diagonal entry
        pair = next(((i, j) for i in active for j in active if i < j and a[i][j] != 0), None)
        if pair is None:
            break  # remaining block is zero
        i, j = pair
        # 2x2 block [[0, b], [b, c]] has determinant -b^2 < 0: one positive, one negative
        b, c = a[i][j], a[j][j]
        det = -b * b
        active.remove(i)
        active.remove(j)
        for k in active:
            # eliminate rows k against the block via its inverse
            x, y = a[k][i], a[k][j]
            if not x and not y:
                continue
            # inverse of [[0,b],[b,c]] is (1/det) [[c,-b],[-b,0]]
            ui = (c * x - b * y) / det
            uj = (-b * x) / det
            for l in active:
                a[k][l] -= ui * a[i][l] + uj * a[j][l]
        pos += 1
        neg += 1
    return Inertia(neg, n - neg - pos, pos)


def graph_inertia(g: Graph) -> Inertia:
    return inertia(adjacency_matrix(g))


def inertia_bound(g: Graph) -> int:
    return graph_inertia(g).bound
