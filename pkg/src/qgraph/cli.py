"""Command-line front end: ``qgraph <subcommand> ...``.

Every subcommand prints a JSON run report on stdout. Exit codes: 0 success,
1 verdict mismatch or invalid certificate, 2 usage error or malformed input,
3 solver budget exhausted.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from . import __version__
from . import embeddings as emb
from . import finitefield as ff
from ._backend import BACKEND
from .graphcore import (Graph, GraphError, graph_from_dict, graph_to_dict, load_json, partition_from_dict,
                        partition_to_dict, to_dot, vectors_from_dict, vectors_to_dict)
from .permgroups import cayley_graph, find_isomorphism, involutions, transpositions, verify_isomorphism
from .qcert import Certificate, CertificateError, alpha_gap_witness, certificate_from_clique_partition, \
    chromatic_gap_witness, verify
from .solvers import BudgetExhausted, chromatic_number, clique_partition, ks_transversal_search, max_independent_set
from .spectra import graph_inertia

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class Run:
    """Accumulates the report for one invocation."""

    def __init__(self, argv):
        self.argv = list(argv)
        self.inputs: dict[str, str] = {}
        self.outputs: dict = {}
        self.t0 = time.perf_counter()

    def read(self, path: str) -> dict:
        p = Path(path)
        try:
            raw = p.read_bytes()
        except OSError as exc:
            raise UsageError("cannot read %s: %s" % (path, exc.strerror)) from exc
        self.inputs[path] = hashlib.sha256(raw).hexdigest()
        data = load_json(p)
        if not isinstance(data, dict):
            raise GraphError("%s: expected a JSON object" % path)
        return data

    def report(self, status: int, error: str | None = None) -> dict:
        out = {
            "command": self.argv,
            "inputs": {k: {"sha256": v} for k, v in self.inputs.items()},
            "outputs": self.outputs,
            "elapsed": time.perf_counter() - self.t0,
            "version": __version__,
            "backend": BACKEND,
            "exit_status": status,
        }
        if error is not None:
            out["error"] = error
        return out


def _unwrap(data: dict, key: str) -> dict:
    """Accept either a bare document or a run report carrying it under outputs."""
    if "outputs" in data and isinstance(data["outputs"], dict) and key in data["outputs"]:
        return data["outputs"][key]
    if key in data and isinstance(data[key], dict):
        return data[key]
    return data


def _graph(run: Run, path: str) -> Graph:
    return graph_from_dict(_unwrap(run.read(path), "graph"))


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _build(name: str, p: int | None):
    """(graph, vectors or None) for a named construction."""
    if name == "piovesan":
        vs = emb.piovesan_vectors()
        return emb.gp_graph(), vs
    if name == "g120":
        return emb.g120_graph(), emb.s5_vectors()
    if name == "cay-s4":
        return cayley_graph(4, involutions(4)), None
    if name == "cay-s5":
        return cayley_graph(5, transpositions(5)), None
    if name in ("er", "er-prime"):
        if p is None:
            raise UsageError("%s needs -p PRIME" % name)
        if name == "er":
            return ff.er_graph(p), None
        return ff.er_prime_graph(p), ff.er_prime_vectors(p)
    if name == "g13":
        return ff.g13(), ff.er_prime_vectors(3)
    if name == "g14":
        return ff.g14(), None
    raise UsageError("unknown construction %r" % name)


def cmd_build(run: Run, a) -> int:
    g, vs = _build(a.name, a.p)
    run.outputs.update({"construction": a.name, "n": g.n, "edges": g.num_edges})
    if a.format == "dot":
        text = to_dot(g, a.name.replace("-", "_"))
    else:
        doc = {"graph": graph_to_dict(g)}
        if vs is not None and a.vectors:
            doc["vectors"] = vectors_to_dict(vs)
        text = _dump(doc)
    if a.output:
        _write(a.output, text)
        run.outputs["written"] = a.output
    else:
        run.outputs["document"] = text if a.format == "dot" else json.loads(text)
    return EXIT_OK


def _limits(a):
    return {"node_limit": a.node_limit, "time_limit": a.time_limit, "backend": a.backend}


def _expect(run: Run, expected, actual) -> int:
    if expected is None:
        return EXIT_OK
    run.outputs["expected"] = expected
    return EXIT_OK if expected == actual else EXIT_MISMATCH


def cmd_alpha(run: Run, a) -> int:
    rep = max_independent_set(_graph(run, a.graph), **_limits(a))
    run.outputs.update(rep.to_dict())
    return _expect(run, a.expect, rep.value)


def cmd_chi(run: Run, a) -> int:
    rep = chromatic_number(_graph(run, a.graph), **_limits(a))
    run.outputs.update(rep.to_dict())
    return _expect(run, a.expect, rep.value)


def cmd_inertia(run: Run, a) -> int:
    inn = graph_inertia(_graph(run, a.graph))
    run.outputs.update({"inertia": list(inn.as_tuple()), "bound": inn.bound})
    return EXIT_OK


def cmd_partition(run: Run, a) -> int:
    g = _graph(run, a.graph)
    try:
        cp = clique_partition(g, a.d)
    except GraphError as exc:
        raise UsageError(str(exc)) from exc
    if cp is None:
        run.outputs["partition"] = None
        return EXIT_MISMATCH
    run.outputs["partition"] = partition_to_dict(cp)
    if a.output:
        _write(a.output, _dump(partition_to_dict(cp)))
    return EXIT_OK


def cmd_ks_check(run: Run, a) -> int:
    g = _graph(run, a.graph)
    cp = partition_from_dict(_unwrap(run.read(a.partition), "partition"))
    t = ks_transversal_search(g, cp)
    verdict = "projective-KS" if t is None else "classical"
    run.outputs.update({"verdict": verdict, "transversal": t})
    return _expect(run, _verdict_name(a.expect), verdict)


def _verdict_name(x):
    return {"ks": "projective-KS", "classical": "classical", None: None}[x]


def cmd_verify_iso(run: Run, a) -> int:
    g, h = _graph(run, a.g), _graph(run, a.h)
    if a.map:
        data = run.read(a.map)
        mapping = _unwrap(data, "isomorphism").get("map") if isinstance(_unwrap(data, "isomorphism"), dict) else None
        if not isinstance(mapping, list):
            raise GraphError("map file needs a list under 'map'")
        ok = verify_isomorphism(g, h, [int(x) for x in mapping])
        run.outputs.update({"isomorphism": {"map": mapping}, "valid": ok})
        return EXIT_OK if ok else EXIT_MISMATCH
    found = find_isomorphism(g, h)
    run.outputs.update({"isomorphism": {"map": found} if found is not None else None, "valid": found is not None})
    return EXIT_OK if found is not None else EXIT_MISMATCH


def cmd_make_cert(run: Run, a) -> int:
    gdoc = run.read(a.graph)
    g = graph_from_dict(_unwrap(gdoc, "graph"))
    vdoc = run.read(a.vectors) if a.vectors else gdoc
    if "vectors" not in vdoc and "dim" not in vdoc:
        raise UsageError("no vectors: build with --vectors or pass --vectors FILE")
    vs = vectors_from_dict(_unwrap(vdoc, "vectors"))
    if len(vs) != g.n:
        raise GraphError("%d vectors for %d vertices" % (len(vs), g.n))
    cp = partition_from_dict(_unwrap(run.read(a.from_partition), "partition"))
    cert = certificate_from_clique_partition(vs, cp)
    verdict = verify(cert, g)
    run.outputs.update({"s": cert.s, "d": cert.d, "verdict": verdict.to_dict()})
    if a.output:
        _write(a.output, _dump(cert.to_dict()))
        run.outputs["written"] = a.output
    else:
        run.outputs["certificate"] = cert.to_dict()
    return EXIT_OK if verdict.valid else EXIT_MISMATCH


def _cert(run: Run, path: str) -> Certificate:
    return Certificate.from_dict(_unwrap(run.read(path), "certificate"))


def cmd_verify_cert(run: Run, a) -> int:
    g = _graph(run, a.graph)
    cert = _cert(run, a.certificate)
    if cert.rows != g.n:
        run.outputs.update({"valid": False, "reason": "certificate has %d rows for %d vertices" % (cert.rows, g.n)})
        return EXIT_MISMATCH
    verdict = verify(cert, g)
    run.outputs.update({"kind": cert.kind, "s": cert.s, **verdict.to_dict()})
    return EXIT_OK if verdict.valid else EXIT_MISMATCH


def cmd_gap_witness(run: Run, a) -> int:
    g = _graph(run, a.graph)
    cert = _cert(run, a.certificate)
    if cert.rows != g.n or not verify(cert, g):
        run.outputs["valid"] = False
        return EXIT_MISMATCH
    res = alpha_gap_witness(g, cert) if cert.kind == "coclique" else chromatic_gap_witness(g, cert)
    run.outputs.update({"kind": cert.kind, "s": cert.s, **res.to_dict()})
    return _expect(run, _verdict_name(a.expect), run.outputs["verdict"])


def cmd_nullspace(run: Run, a) -> int:
    if a.s6:
        cons = emb.s6_obstruction_constraints()
    elif a.constraints:
        data = run.read(a.constraints)
        try:
            cons = [tuple(int(x) for x in row) for row in data["constraints"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError("malformed constraints JSON: %s" % exc) from exc
    else:
        raise UsageError("nullspace needs --s6 or --constraints FILE")
    basis = emb.extension_nullspace(cons, pure=a.pure)
    run.outputs.update({"constraints": [list(c) for c in cons], "pure": a.pure,
                        "basis": [[str(x) for x in v] for v in basis], "dimension": len(basis)})
    if a.expect_empty:
        run.outputs["expected"] = "empty"
        return EXIT_OK if not basis else EXIT_MISMATCH
    return EXIT_OK


def cmd_reproduce(run: Run, a) -> int:
    from .reproduce import CLAIMS, run_claim

    if a.list or not a.claim:
        run.outputs["claims"] = list(CLAIMS)
        return EXIT_OK if a.list else EXIT_USAGE
    if a.claim not in CLAIMS:
        raise UsageError("unknown claim %r; try --list" % a.claim)
    res = run_claim(a.claim)
    run.outputs.update(res.to_dict())
    for c in res.checks:
        print("%s  %s: expected %s, got %s" % ("ok  " if c.ok else "FAIL", c.name, c.expected, c.actual),
              file=sys.stderr)
    return EXIT_OK if res.ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="qgraph", description="Exact tools for orthogonality graphs and projector certificates.")
    ap.add_argument("--version", action="version", version="%(prog)s " + __version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=1,
                        help="accepted for compatibility; all solvers run single-threaded and deterministic")
    common.add_argument("--report", help="also write the run report to this file")
    sub = ap.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    def add(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    def solver_opts(p):
        p.add_argument("--node-limit", type=int, default=None)
        p.add_argument("--time-limit", type=float, default=None, help="seconds (default from QGRAPH_BUDGET_MS)")
        p.add_argument("--backend", choices=("cython", "python"), default=None)
        p.add_argument("--expect", type=int, default=None, help="exit 1 unless the value equals this")

    p = add("build", help="construct a named graph")
    p.add_argument("name", choices=("piovesan", "g120", "cay-s4", "cay-s5", "er", "er-prime", "g13", "g14"))
    p.add_argument("-p", type=int, default=None, help="prime for er / er-prime")
    p.add_argument("-o", "--output")
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.add_argument("--vectors", action="store_true", default=True, help="embed the vector set (default)")
    p.add_argument("--no-vectors", dest="vectors", action="store_false")
    p.set_defaults(func=cmd_build)

    for name, func, helptext in (("alpha", cmd_alpha, "exact independence number"),
                                 ("chi", cmd_chi, "exact chromatic number")):
        p = add(name, help=helptext)
        p.add_argument("graph")
        solver_opts(p)
        p.set_defaults(func=func)

    p = add("inertia", help="exact adjacency inertia and the derived bound")
    p.add_argument("graph")
    p.set_defaults(func=cmd_inertia)

    p = add("partition", help="partition the vertices into d-cliques")
    p.add_argument("graph")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_partition)

    p = add("ks-check", help="search for a coclique transversal of a clique partition")
    p.add_argument("graph")
    p.add_argument("partition")
    p.add_argument("--expect", choices=("ks", "classical"))
    p.set_defaults(func=cmd_ks_check)

    p = add("verify-iso", help="check or find an isomorphism G -> H")
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("--map", help="JSON file with a list under 'map'")
    p.set_defaults(func=cmd_verify_iso)

    p = add("make-cert", help="projector certificate from vectors and a clique partition")
    p.add_argument("graph")
    p.add_argument("--from-partition", required=True)
    p.add_argument("--vectors", help="vector-set JSON (default: vectors embedded in the graph file)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_make_cert)

    p = add("verify-cert", help="check a certificate against a graph")
    p.add_argument("graph")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify_cert)

    p = add("gap-witness", help="classical witness or projective-KS verdict for a certificate")
    p.add_argument("graph")
    p.add_argument("certificate")
    p.add_argument("--expect", choices=("ks", "classical"))
    p.set_defaults(func=cmd_gap_witness)

    p = add("nullspace", help="quaternion extension space for a set of constraints")
    p.add_argument("--s6", action="store_true", help="use the seven S_6 extension constraints")
    p.add_argument("--constraints", help="JSON file with a list under 'constraints'")
    p.add_argument("--pure", action="store_true", help="restrict to pure quaternions")
    p.add_argument("--expect-empty", action="store_true")
    p.set_defaults(func=cmd_nullspace)

    p = add("reproduce", help="run a named end-to-end reproduction")
    p.add_argument("claim", nargs="?")
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_reproduce)
    return ap


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    run = Run(argv)
    error = None
    try:
        status = args.func(run, args)
    except BudgetExhausted as exc:
        status, error = EXIT_BUDGET, str(exc)
        run.outputs.update(exc.report.to_dict())
    except (UsageError, GraphError, CertificateError, ValueError, KeyError, TypeError) as exc:
        status, error = EXIT_USAGE, str(exc)
    report = run.report(status, error)
    text = _dump(report)
    sys.stdout.write(text)
    if args.report:
        _write(args.report, text)
    if error:
        print("qgraph: error: %s" % error, file=sys.stderr)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
