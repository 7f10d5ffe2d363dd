import itertools
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qgraph.graphcore import Graph, adjacency_matrix
from qgraph.solvers import independence_number
from qgraph.spectra import Inertia, graph_inertia, inertia, inertia_bound

from .conftest import complete, cycle
from .strategies import graphs


def numpy_inertia(m):
    if not len(m):
        return (0, 0, 0)
    ev = np.linalg.eigvalsh(np.array(m, dtype=float))
    tol = 1e-9
    return (int((ev < -tol).sum()), int((abs(ev) <= tol).sum()), int((ev > tol).sum()))


@pytest.mark.parametrize("n", range(2, 11))
def test_complete_graphs(n):
    assert graph_inertia(complete(n)).as_tuple() == (n - 1, 0, 1)
    assert inertia_bound(complete(n)) == 1


def test_small_cases():
    assert graph_inertia(Graph(3, (0, 0, 0))).as_tuple() == (0, 3, 0)
    assert graph_inertia(cycle(5)).as_tuple() == (2, 0, 3)
    assert graph_inertia(cycle(4)).as_tuple() == (1, 2, 1)
    assert inertia([]).as_tuple() == (0, 0, 0)
    assert inertia([[0, 1], [1, 0]]).as_tuple() == (1, 0, 1)
    assert inertia([[Fraction(1, 2), 0], [0, -3]]).as_tuple() == (1, 0, 1)
    assert Inertia(2, 1, 3).bound == 3


def test_rejects_bad_matrices():
    with pytest.raises(ValueError):
        inertia([[0, 1], [0, 0]])
    with pytest.raises(ValueError):
        inertia([[0, 1, 2], [1, 0, 0]])


@settings(max_examples=150)
@given(graphs(max_n=10))
def test_matches_numpy_on_graphs(g):
    assert graph_inertia(g).as_tuple() == numpy_inertia(adjacency_matrix(g))


@settings(max_examples=150)
@given(st.integers(1, 7).flatmap(
    lambda n: st.lists(st.integers(-3, 3), min_size=n * (n + 1) // 2, max_size=n * (n + 1) // 2).map(
        lambda xs: _symmetric(n, xs))))
def test_matches_numpy_on_integer_matrices(m):
    assert inertia(m).as_tuple() == numpy_inertia(m)


def _symmetric(n, xs):
    m = [[0] * n for _ in range(n)]
    it = iter(xs)
    for i in range(n):
        for j in range(i, n):
            m[i][j] = m[j][i] = next(it)
    return m


def _unimodular(n, rng):
    s = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-2, -1, 1, 2])
        s[i] = [a + c * b for a, b in zip(s[i], s[j])]
    return s


def _congruent(a, s):
    n = len(a)
    sa = [[sum(s[i][k] * a[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    return [[sum(sa[i][k] * s[j][k] for k in range(n)) for j in range(n)] for i in range(n)]


@pytest.mark.parametrize("seed", range(25))
def test_congruence_invariance(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 8)
    a = adjacency_matrix(Graph(n, tuple(0 for _ in range(n))))
    for i, j in itertools.combinations(range(n), 2):
        if rng.random() < 0.5:
            a[i][j] = a[j][i] = 1
    b = _congruent(a, _unimodular(n, rng))
    assert inertia(b) == inertia(a)


@settings(max_examples=100)
@given(graphs(max_n=9))
def test_bound_dominates_alpha(g):
    assert independence_number(g) <= inertia_bound(g) if g.n else True
