import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qgraph import embeddings as emb
from qgraph.graphcore import CliquePartition, from_edges, vector_set
from qgraph.qcert import (Certificate, CertificateError, RatMat, alpha_gap_witness, certificate_from_clique_partition,
                          chromatic_gap_witness, classical_certificate, coloring_certificate, drop_column,
                          entries_orthogonality_graph, g_map, h_map, projector_from_vector, verify)
from qgraph.reproduce import random_basis_certificates
from qgraph.solvers import clique_partition, independence_number

from .conftest import complete, cycle

int_vectors = st.integers(1, 5).flatmap(
    lambda d: st.lists(st.integers(-4, 4), min_size=d, max_size=d).filter(any))


@pytest.fixture(scope="module")
def gp():
    g = emb.gp_graph()
    return g, certificate_from_clique_partition(emb.piovesan_vectors(), emb.gp_row_partition())


@pytest.fixture(scope="module")
def g120():
    g = emb.g120_graph()
    return g, certificate_from_clique_partition(emb.s5_vectors(), clique_partition(g, 4))


def test_ratmat_arithmetic():
    a = RatMat([[1, 2], [3, 4]])
    assert a @ RatMat.identity(2) == a
    assert (a + a) == a.scale(2) and (a - a).is_zero()
    assert a.transpose() == RatMat([[1, 3], [2, 4]])
    assert a.trace() == 5 and a.rank() == 2
    assert RatMat([[1, 2], [2, 4]]).rank() == 1
    assert a.trace_inner(RatMat.identity(2)) == 5
    assert a.apply([1, 1]) == (3, 7)
    assert not a.is_symmetric()
    with pytest.raises(CertificateError):
        a @ RatMat.zero(3)
    with pytest.raises(CertificateError):
        RatMat([[1], [1, 2]])


@given(int_vectors)
def test_projector_properties(v):
    p = projector_from_vector(v)
    assert p.is_projector() and p.trace() == 1 and p.rank() == 1
    assert p.apply(v) == tuple(Fraction(x) for x in v)
    assert RatMat.from_json(json.loads(json.dumps(p.to_json())), len(v)) == p


def test_zero_vector_has_no_projector():
    with pytest.raises(CertificateError):
        projector_from_vector((0, 0))
    with pytest.raises(CertificateError):
        h_map(RatMat.zero(2))
    with pytest.raises(CertificateError):
        RatMat.from_json([[{"num": 1}]], 1)


@settings(max_examples=200)
@given(st.lists(st.lists(st.integers(-1, 1), min_size=3, max_size=3).filter(any), min_size=2, max_size=6))
def test_g_and_h_preserve_orthogonality(vecs):
    ps = [g_map(v) for v in vecs]
    for a in range(len(vecs)):
        back = h_map(ps[a])
        assert sum(x * y for x, y in zip(back, back)) * sum(x * x for x in vecs[a]) == \
            sum(x * y for x, y in zip(back, vecs[a])) ** 2
        for b in range(len(vecs)):
            orth = sum(x * y for x, y in zip(vecs[a], vecs[b])) == 0
            assert orth == (ps[a].trace_inner(ps[b]) == 0) == (ps[a] @ ps[b]).is_zero()
            if orth:
                assert sum(x * y for x, y in zip(h_map(ps[a]), h_map(ps[b]))) == 0


def test_gp_certificate(gp):
    g, cert = gp
    assert (cert.kind, cert.d, cert.s, cert.rows) == ("coclique", 4, 6, 24)
    assert verify(cert, g).valid
    assert len(cert.nonzero()) == 24
    res = alpha_gap_witness(g, cert)
    assert res.kochen_specker and res.to_dict() == {"verdict": "projective-KS", "witness": None}


def test_certificate_json_round_trip(gp):
    _, cert = gp
    data = json.loads(json.dumps(cert.to_dict()))
    assert Certificate.from_dict(data) == cert
    data["s"] = 7
    with pytest.raises(CertificateError):
        Certificate.from_dict(data)
    with pytest.raises(CertificateError):
        Certificate.from_dict({"kind": "coclique"})
    with pytest.raises(CertificateError):
        Certificate("mystery", 1, ())


def test_bad_partitions_rejected():
    vs = vector_set([(1, 0), (1, 1), (0, 1), (1, -1)])
    with pytest.raises(CertificateError):
        certificate_from_clique_partition(vs, CliquePartition.of([(0, 1), (2, 3)]))
    with pytest.raises(CertificateError):
        certificate_from_clique_partition(vs, CliquePartition.of([(0, 2), (0, 2)]))


def _replace(cert, v, i, entry):
    grid = [list(r) for r in cert.grid]
    grid[v][i] = entry
    return Certificate(cert.kind, cert.d, tuple(map(tuple, grid)))


def test_violations_are_reported(gp):
    g, cert = gp
    bad = _replace(cert, 0, 0, cert.grid[0][0].scale(2))
    assert {"idempotent", "column_sum"} <= verify(bad, g).conditions()
    skew = RatMat([[1, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
    assert "symmetric" in verify(_replace(cert, 0, 0, skew), g).conditions()
    assert verify(_replace(cert, 0, 0, RatMat.zero(4)), g).conditions() == {"column_sum"}
    # a second copy of vertex 1's projector in another column breaks row orthogonality
    dup = _replace(cert, 1, 3, cert.grid[1][0])
    assert "row_orthogonality" in verify(dup, g).conditions()
    with pytest.raises(CertificateError):
        verify(cert, cycle(5))


def test_cross_orthogonality():
    cert = classical_certificate(from_edges(3, []), [0, 2])
    assert verify(cert, from_edges(3, [])).valid
    assert verify(cert, from_edges(3, [(0, 2)])).conditions() == {"cross_orthogonality"}
    with pytest.raises(CertificateError):
        classical_certificate(complete(3), [0, 1])


def test_coloring_certificates():
    g = cycle(5)
    cert = coloring_certificate(g, [0, 1, 0, 1, 2])
    assert cert.s == 3 and verify(cert, g).valid
    res = chromatic_gap_witness(g, cert)
    assert not res.kochen_specker
    colours = [res.witness[v] for v in range(5)]
    assert all(colours[u] != colours[v] for u, v in g.edges())
    assert verify(cert, complete(5)).conditions() == {"edge_orthogonality"}
    missing = _replace(cert, 4, 2, RatMat.zero(1))
    assert verify(missing, g).conditions() == {"row_sum"}
    with pytest.raises(CertificateError):
        coloring_certificate(g, [0, 0, 1, 0, 1])
    with pytest.raises(CertificateError):
        alpha_gap_witness(g, cert)
    with pytest.raises(CertificateError):
        chromatic_gap_witness(g, classical_certificate(g, [0, 2]))


def test_gap_witness_rejects_invalid(gp):
    g, cert = gp
    with pytest.raises(CertificateError):
        alpha_gap_witness(g, _replace(cert, 0, 0, RatMat.zero(4)))


def test_entries_graph(gp):
    _, cert = gp
    eg = entries_orthogonality_graph(cert)
    assert eg.graph.n == 24 and len(eg.cliques) == 6
    assert all(eg.graph.is_clique(c) for c in eg.cliques)
    rows = entries_orthogonality_graph(cert, by="row")
    assert len(rows.cliques) == 24


def test_drop_column(gp):
    g, cert = gp
    for j in range(6):
        smaller = drop_column(cert, j)
        assert smaller.s == 5 and verify(smaller, g).valid
        res = alpha_gap_witness(g, smaller)
        assert not res.kochen_specker and len(res.witness) == 5 and g.is_coclique(res.witness)
    with pytest.raises(CertificateError):
        drop_column(cert, 6)
    with pytest.raises(CertificateError):
        drop_column(classical_certificate(g, [0]), 0)


def test_classical_fixtures():
    c5 = cycle(5)
    res = alpha_gap_witness(c5, classical_certificate(c5, [1, 3]))
    assert res.witness == [1, 3]
    for n in range(2, 6):
        assert not alpha_gap_witness(complete(n), classical_certificate(complete(n), [n - 1])).kochen_specker


def test_basis_certificates_are_classical():
    fixtures = random_basis_certificates(seed=3, count=25)
    assert len(fixtures) == 25
    for _, g, cert in fixtures:
        res = alpha_gap_witness(g, cert)
        assert not res.kochen_specker
        assert independence_number(g) >= cert.s


def test_alpha_two_graphs_reject_three_column_basis_certificates():
    # every accepted standard-basis certificate yields a coclique of size s
    for _, g, cert in random_basis_certificates(seed=11, count=40):
        if independence_number(g) == 2:
            assert cert.s <= 2


def test_truncated_g120_certificate_stays_kochen_specker(g120):
    g, cert = g120
    assert verify(cert, g).valid and cert.s == 30
    assert alpha_gap_witness(g, cert).kochen_specker
    c = cert
    while c.s > 23:
        c = drop_column(c, c.s - 1)
        assert verify(c, g).valid
        # s <= alpha = 24 here, yet no transversal of pairwise non-orthogonal entries exists
        assert alpha_gap_witness(g, c).kochen_specker
