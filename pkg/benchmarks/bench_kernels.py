"""Compiled vs pure-Python search kernels on the graphs this package cares about.

    python benchmarks/bench_kernels.py [--repeat N]

Both backends must return identical values and node counts; the table
reports the best wall time over the repeats.
"""
import argparse
import time

from qgraph import embeddings as emb
from qgraph import finitefield as ff
from qgraph._backend import get_kernels
from qgraph.permgroups import cayley_graph, transpositions
from qgraph.solvers import dsatur_greedy


def cases():
    g120 = emb.g120_graph()
    yield "alpha G_p", "mis", emb.gp_graph(), None
    yield "alpha G_120", "mis", g120, None
    yield "alpha ER(7)", "mis", ff.er_graph(7), None
    yield "alpha ER'(11)", "mis", ff.er_prime_graph(11), None
    yield "alpha Cay(S5, transp.)", "mis", cayley_graph(5, transpositions(5)), None
    yield "4-col G_13", "col", ff.g13(), 4
    yield "3-col G_13 (none)", "col", ff.g13(), 3
    yield "4-col G_p (none)", "col", emb.gp_graph(), 4
    yield "greedy-1 col ER(5)", "col", ff.er_graph(5), max(dsatur_greedy(ff.er_graph(5)))


def run(kern, kind, g, k):
    if kind == "mis":
        return kern.mis_search(list(g.adj), g.n, 0, 0.0)
    return kern.color_search(list(g.adj), g.n, k, 0, 0.0)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    py = get_kernels("python")
    try:
        cy = get_kernels("cython")
    except ImportError:
        raise SystemExit("compiled kernels are not built; run `pip install --no-build-isolation -e .`")
    print("%-24s %10s %12s %12s %8s" % ("case", "nodes", "python [s]", "cython [s]", "speedup"))
    for name, kind, g, k in cases():
        best = {}
        outs = {}
        for label, kern in (("python", py), ("cython", cy)):
            times = []
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                outs[label] = run(kern, kind, g, k)
                times.append(time.perf_counter() - t0)
            best[label] = min(times)
        if outs["python"] != outs["cython"]:
            raise SystemExit("backends disagree on %s" % name)
        nodes = outs["python"][2] if kind == "mis" else outs["python"][1]
        print("%-24s %10d %12.4f %12.4f %7.1fx" % (name, nodes, best["python"], best["cython"],
                                                    best["python"] / max(best["cython"], 1e-9)))


if __name__ == "__main__":
    main()
