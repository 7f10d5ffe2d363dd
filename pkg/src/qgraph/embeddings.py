"""Integer quaternions and the permutation -> R^4 vector construction.

Conventions are fixed so every output is deterministic: Hamilton rules
(ij = k, jk = i, ki = j), each cycle (a1 ... am) expanded as
(a1 am)(a1 a(m-1))...(a1 a2) with cycles in ascending order of their minima,
and the quaternion images of that word multiplied left to right.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .graphcore import CliquePartition, Graph, VectorSet, orthogonality_graph, vector_set
from .permgroups import Perm, all_perms, parse_cycles


@dataclass(frozen=True)
class Quat:
    a: int = 0
    b: int = 0
    c: int = 0
    d: int = 0

    def __mul__(self, other: "Quat") -> "Quat":
        return quat_mul(self, other)

    def __add__(self, other: "Quat") -> "Quat":
        return Quat(self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d)

    def __neg__(self) -> "Quat":
        return Quat(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other: "Quat") -> "Quat":
        return self + (-other)

    @property
    def coeffs(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def norm(self) -> int:
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def conjugate(self) -> "Quat":
        return Quat(self.a, -self.b, -self.c, -self.d)

    @classmethod
    def from_vector(cls, v: Sequence[int]) -> "Quat":
        return cls(*v)


ONE = Quat(1, 0, 0, 0)
I = Quat(0, 1, 0, 0)
J = Quat(0, 0, 1, 0)
K = Quat(0, 0, 0, 1)


def quat_mul(p: Quat, q: Quat) -> Quat:
    a1, b1, c1, d1 = p.coeffs
    a2, b2, c2, d2 = q.coeffs
    return Quat(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
        a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
    )


# Images of the transpositions of S_4 (from the quaternion construction of the
# Cayley isomorphism) and of the four transpositions moving 5.
S4_TRANSPOSITION_IMAGES: dict[tuple[int, int], tuple[int, int, int, int]] = {
    (1, 4): (0, 1, -1, 0),
    (2, 3): (0, 1, 1, 0),
    (1, 3): (0, 1, 0, 1),
    (2, 4): (0, 1, 0, -1),
    (1, 2): (0, 0, 1, -1),
    (3, 4): (0, 0, 1, 1),
}
S5_EXTRA_IMAGES: dict[tuple[int, int], tuple[int, int, int, int]] = {
    (1, 5): (0, 1, -1, 1),
    (2, 5): (0, 1, 1, -1),
    (3, 5): (0, 1, 1, 1),
    (4, 5): (0, -1, 1, 1),
}
S5_TRANSPOSITION_IMAGES = {**S4_TRANSPOSITION_IMAGES, **S5_EXTRA_IMAGES}


def transposition_decomposition(p: Perm) -> list[tuple[int, int]]:
    out = []
    for cyc in p.cycles():
        first = cyc[0]
        for x in reversed(cyc[1:]):
            out.append((first, x))
    return out


def perm_to_vector(p: Perm, images: Mapping[tuple[int, int], Sequence[int]]) -> tuple[int, int, int, int]:
    q = ONE
    for a, b in transposition_decomposition(p):
        key = (min(a, b), max(a, b))
        if key not in images:
            raise KeyError("no image for transposition (%d%d)" % key)
        q = q * Quat.from_vector(images[key])
    return q.coeffs


def perm_vectors(n: int, images: Mapping[tuple[int, int], Sequence[int]]) -> VectorSet:
    perms = all_perms(n)
    return vector_set([perm_to_vector(p, images) for p in perms], [str(p) for p in perms])


def s4_vectors() -> VectorSet:
    return perm_vectors(4, S4_TRANSPOSITION_IMAGES)


def s5_vectors() -> VectorSet:
    vs = perm_vectors(5, S5_TRANSPOSITION_IMAGES)
    for v in vs.vectors:
        if not any(v):  # pragma: no cover - construction defect
            raise RuntimeError("zero vector in S_5 construction")
    return vs


def g120_graph() -> Graph:
    return orthogonality_graph(s5_vectors())


# --- Piovesan's 24-vector graph -------------------------------------------

PIOVESAN_TABLE: tuple[tuple[int, int, int, int], ...] = (
    (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
    (0, 1, 1, 0), (1, 0, 0, -1), (1, 0, 0, 1), (0, 1, -1, 0),
    (1, 1, 1, 1), (1, -1, 1, -1), (1, -1, -1, 1), (1, 1, -1, -1),
    (1, -1, 0, 0), (1, 1, 0, 0), (0, 0, 1, 1), (0, 0, 1, -1),
    (-1, 1, 1, 1), (1, 1, 1, -1), (1, -1, 1, 1), (1, 1, -1, 1),
    (1, 0, 1, 0), (0, 1, 0, 1), (1, 0, -1, 0), (0, 1, 0, -1),
)

# vertex number (1-based) -> element of S_4 for the explicit Cayley isomorphism
CAYLEY_TABLE: tuple[str, ...] = (
    "(1)", "(12)(34)", "(13)(24)", "(14)(23)",
    "(23)", "(1243)", "(1342)", "(14)",
    "(124)", "(234)", "(143)", "(132)",
    "(1324)", "(1423)", "(34)", "(12)",
    "(142)", "(134)", "(123)", "(243)",
    "(1432)", "(13)", "(1234)", "(24)",
)

# 1-based indices negated to get the sign-adjusted copy of the table
SIGN_FLIP_INDICES = (7, 10, 11, 13, 14, 17, 18, 20, 23)


def piovesan_vectors() -> VectorSet:
    return vector_set(PIOVESAN_TABLE, [str(i + 1) for i in range(24)])


def gp_graph() -> Graph:
    return orthogonality_graph(piovesan_vectors())


def gp_row_partition() -> CliquePartition:
    """The six table rows, four vectors each."""
    return CliquePartition(tuple(tuple(range(4 * r, 4 * r + 4)) for r in range(6)), 4)


def cayley_table_perms() -> list[Perm]:
    return [parse_cycles(s, 4) for s in CAYLEY_TABLE]


def sign_flip(vs: VectorSet, signs: Sequence[int]) -> VectorSet:
    if len(signs) != len(vs):
        raise ValueError("need one sign per vector")
    if any(s == 0 for s in signs):
        raise ValueError("zero scale factor")
    return VectorSet(vs.dim, tuple(tuple(s * x for x in v) for s, v in zip(signs, vs.vectors)), vs.tags)


def piovesan_flip_signs() -> list[int]:
    return [-1 if i + 1 in SIGN_FLIP_INDICES else 1 for i in range(24)]


# --- extending the transposition images ------------------------------------

def nullspace(rows: Sequence[Sequence[int | Fraction]], dim: int) -> list[tuple[Fraction, ...]]:
    """Basis of {x : <x, r> = 0 for every r} by exact Gauss-Jordan elimination.

    Each basis vector has a 1 in one free coordinate and 0 in the others.
    """
    m = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for col in range(dim):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        lead = m[r][col]
        m[r] = [x / lead for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    basis = []
    for free in (c for c in range(dim) if c not in pivots):
        x = [Fraction(0)] * dim
        x[free] = Fraction(1)
        for row_i, pc in enumerate(pivots):
            x[pc] = -m[row_i][free]
        basis.append(tuple(x))
    return basis


def extension_nullspace(constraints: Iterable[Sequence[int]], pure: bool = False) -> list[tuple[Fraction, ...]]:
    """Vectors orthogonal to every constraint in Q^4.

    A transposition squares to the identity, so its quaternion image has to
    square to a negative real, which forces a zero real part. ``pure=True``
    adds that condition.
    """
    rows = [list(c) for c in constraints]
    if pure:
        rows.append([1, 0, 0, 0])
    return nullspace(rows, 4)


def s6_obstruction_constraints() -> list[tuple[int, int, int, int]]:
    """Images that a new transposition (16) would have to be orthogonal to."""
    keys = [(2, 3), (3, 4), (2, 4), (1, 5), (2, 5), (3, 5), (4, 5)]
    return [S5_TRANSPOSITION_IMAGES[k] for k in keys]

