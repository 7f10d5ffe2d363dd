import pytest

from qgraph import finitefield as ff
from qgraph.graphcore import GraphError, components, induced_subgraph, is_connected
from qgraph.permgroups import find_isomorphism
from qgraph.solvers import chromatic_number


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_point_count_and_order(p):
    pts = ff.projective_points(p)
    assert len(pts) == p * p + p + 1
    coords = [v.coords for v in pts]
    assert coords == sorted(coords)
    assert all(next(c for c in v if c) == 1 for v in coords)


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_er_degrees(p):
    g = ff.er_graph(p)
    absolute = set(ff.absolute_points(p))
    assert len(absolute) == p + 1
    for v in range(g.n):
        assert g.degree(v) == (p if v in absolute else p + 1)


@pytest.mark.parametrize("bad", [1, 2, 4, 9, -3, 15])
def test_rejects_non_odd_primes(bad):
    with pytest.raises(GraphError):
        ff.projective_points(bad)


def test_symmetric_lift():
    assert ff.symmetric_lift(ff.FpVec(7, (1, 4, 6))) == (1, -3, -1)
    assert ff.symmetric_lift(ff.FpVec(7, (0, 3, 0))) == (0, 3, 0)
    with pytest.raises(ValueError):
        ff.FpVec(5, (0, 0, 0))
    with pytest.raises(ValueError):
        ff.FpVec(5, (5, 0, 0))


def test_labels():
    g = ff.er_graph(3)
    assert g.labels[0] == "[0,0,1]" and g.labels[-1] == "[1,2,2]"


def test_g13_and_cone():
    g = ff.g13()
    assert g.n == 13
    assert find_isomorphism(g, ff.er_graph(3)) is not None
    h = ff.g14()
    assert h.n == 14 and h.degree(13) == 13
    assert chromatic_number(g).value == 4
    assert chromatic_number(h).value == 5


@pytest.mark.parametrize("p", [3, 5, 7])
def test_er_prime_connected_small(p):
    assert is_connected(ff.er_prime_graph(p))


def test_er_prime_11_isolated_vertices():
    # real orthogonality loses the mod-p relations of these points entirely
    g = ff.er_prime_graph(11)
    isolated = [c[0] for c in components(g) if len(c) == 1]
    assert [g.labels[v] for v in isolated] == ["[1,2,4]", "[1,2,7]", "[1,9,4]", "[1,9,7]"]
    assert len(components(g)) == 5


def test_er_prime_5_contains_er_prime_3():
    keep = ff.small_entry_vertices(5)
    assert len(keep) == 13
    assert find_isomorphism(induced_subgraph(ff.er_prime_graph(5), keep), ff.g13()) is not None
