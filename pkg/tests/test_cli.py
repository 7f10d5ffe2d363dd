import json

import pytest

from qgraph.cli import main
from qgraph.graphcore import graph_to_dict

from .conftest import random_graph


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr().out
    return status, json.loads(out) if out.strip() else None


@pytest.fixture
def gp_files(tmp_path, capsys):
    g = tmp_path / "g.json"
    assert run(capsys, "build", "piovesan", "-o", str(g))[0] == 0
    return tmp_path, g


def test_build_and_alpha(gp_files, capsys):
    _, g = gp_files
    status, rep = run(capsys, "alpha", str(g))
    assert status == 0 and rep["outputs"]["value"] == 5
    assert rep["command"] == ["alpha", str(g)]
    assert len(rep["inputs"][str(g)]["sha256"]) == 64
    assert "version" in rep and "elapsed" in rep
    assert run(capsys, "alpha", str(g), "--expect", "6")[0] == 1


def test_pipeline_round_trip(gp_files, capsys):
    d, g = gp_files
    part, cert = d / "p.json", d / "c.json"
    assert run(capsys, "partition", str(g), "-d", "4", "-o", str(part))[0] == 0
    status, rep = run(capsys, "ks-check", str(g), str(part), "--expect", "ks")
    assert status == 0 and rep["outputs"]["verdict"] == "projective-KS"
    status, rep = run(capsys, "make-cert", str(g), "--from-partition", str(part), "-o", str(cert))
    assert status == 0 and rep["outputs"]["s"] == 6
    assert run(capsys, "verify-cert", str(g), str(cert))[0] == 0
    status, rep = run(capsys, "gap-witness", str(g), str(cert), "--expect", "ks")
    assert status == 0 and rep["outputs"]["verdict"] == "projective-KS"
    assert run(capsys, "gap-witness", str(g), str(cert), "--expect", "classical")[0] == 1


def test_reports_refeed(gp_files, capsys):
    d, g = gp_files
    report = d / "part_report.json"
    assert run(capsys, "partition", str(g), "-d", "4", "--report", str(report))[0] == 0
    # the saved run report carries the partition and is accepted as input
    assert run(capsys, "ks-check", str(g), str(report))[0] == 0
    status, rep = run(capsys, "make-cert", str(g), "--from-partition", str(report))
    cert_report = d / "cert_report.json"
    cert_report.write_text(json.dumps(rep))
    assert run(capsys, "verify-cert", str(g), str(cert_report))[0] == 0


def test_invalid_certificate_exit_code(gp_files, capsys):
    d, g = gp_files
    cert = d / "c.json"
    part = d / "p.json"
    run(capsys, "partition", str(g), "-d", "4", "-o", str(part))
    run(capsys, "make-cert", str(g), "--from-partition", str(part), "-o", str(cert))
    data = json.loads(cert.read_text())
    data["entries"][0][0] = "zero"
    cert.write_text(json.dumps(data))
    status, rep = run(capsys, "verify-cert", str(g), str(cert))
    assert status == 1 and rep["outputs"]["valid"] is False
    assert run(capsys, "gap-witness", str(g), str(cert))[0] == 1


def test_chi_and_inertia(tmp_path, capsys):
    g = tmp_path / "g13.json"
    run(capsys, "build", "g13", "-o", str(g))
    status, rep = run(capsys, "chi", str(g))
    assert status == 0 and rep["outputs"]["value"] == 4
    status, rep = run(capsys, "inertia", str(g))
    assert status == 0 and sum(rep["outputs"]["inertia"]) == 13


def test_verify_iso(tmp_path, capsys):
    g, h, m = tmp_path / "g.json", tmp_path / "h.json", tmp_path / "m.json"
    run(capsys, "build", "piovesan", "-o", str(g))
    run(capsys, "build", "cay-s4", "-o", str(h))
    status, rep = run(capsys, "verify-iso", str(g), str(h))
    assert status == 0
    m.write_text(json.dumps(rep))
    assert run(capsys, "verify-iso", str(g), str(h), "--map", str(m))[0] == 0
    m.write_text(json.dumps({"map": list(range(24))}))
    assert run(capsys, "verify-iso", str(g), str(h), "--map", str(m))[0] == 1
    m.write_text(json.dumps({"map": [0] * 24}))
    assert run(capsys, "verify-iso", str(g), str(h), "--map", str(m))[0] == 2


def test_build_variants(tmp_path, capsys):
    status, rep = run(capsys, "build", "er", "-p", "5")
    assert status == 0 and rep["outputs"]["n"] == 31
    assert rep["outputs"]["document"]["graph"]["n"] == 31
    status, rep = run(capsys, "build", "g14", "--format", "dot")
    assert status == 0 and rep["outputs"]["document"].startswith("graph g14 {")
    assert run(capsys, "build", "er")[0] == 2
    assert run(capsys, "build", "er-prime", "-p", "9")[0] == 2
    status, rep = run(capsys, "build", "cay-s5", "--no-vectors")
    assert rep["outputs"]["n"] == 120


def test_nullspace(capsys):
    status, rep = run(capsys, "nullspace", "--s6", "--pure", "--expect-empty")
    assert status == 0 and rep["outputs"]["dimension"] == 0
    status, rep = run(capsys, "nullspace", "--s6")
    assert status == 0 and rep["outputs"]["basis"] == [["1", "0", "0", "0"]]
    assert run(capsys, "nullspace", "--s6", "--expect-empty")[0] == 1
    assert run(capsys, "nullspace")[0] == 2


def test_error_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{oops")
    status, rep = run(capsys, "alpha", str(bad))
    assert status == 2 and "malformed JSON" in rep["error"]
    assert run(capsys, "alpha", str(tmp_path / "missing.json"))[0] == 2
    assert main(["frobnicate"]) == 2
    assert main([]) == 2
    g = tmp_path / "g.json"
    run(capsys, "build", "g120", "-o", str(g))
    status, rep = run(capsys, "alpha", str(g), "--node-limit", "3")
    assert status == 3 and rep["outputs"]["status"] == "budget_exhausted"


def test_budget_from_environment(tmp_path, capsys, monkeypatch):
    g = tmp_path / "g.json"
    g.write_text(json.dumps(graph_to_dict(random_graph(120, 0.15, 5))))
    monkeypatch.setenv("QGRAPH_BUDGET_MS", "1")
    status, rep = run(capsys, "alpha", str(g), "--backend", "python")
    assert status == 3 and "budget" in rep["error"]


def test_reproduce(capsys):
    status, rep = run(capsys, "reproduce", "--list")
    assert status == 0 and "gp-gap" in rep["outputs"]["claims"]
    status, rep = run(capsys, "reproduce", "gp-gap")
    assert status == 0 and rep["outputs"]["ok"]
    assert run(capsys, "reproduce", "nope")[0] == 2
    assert run(capsys, "reproduce")[0] == 2
