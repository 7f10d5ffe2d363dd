"""Acceptance criteria, one test each, at their stated tolerances and runtime limits.

Every criterion is exact (tolerance 0). A summary line per criterion is
printed at the end of the pytest run; ``python tests/test_acceptance.py``
prints the same lines without pytest.
"""
import time

import pytest

from qgraph.reproduce import run_claim

RESULTS: dict[int, tuple[bool, str]] = {}

CRITERIA = {
    1: ("gp-gap", "G_p gap: partition, no KS transversal, alpha=5, s=6 certificate, KS verdict", 5.0),
    2: ("cayley-iso", "Cayley isomorphism: explicit table and independent search", 5.0),
    3: ("quaternion", "Quaternion construction: 576 pairs, graph isomorphic to G_p", 1.0),
    4: ("g120", "G_120: 120 lines, 30 four-cliques, s=30 certificate, alpha=29, KS verdict", 600.0),
    5: ("s6-obstruction", "S_6 obstruction: empty extension basis", 1.0),
    6: ("er-family", "ER family: sizes, G_13, connectivity, chi(G_13)=4, chi(G_14)=5, induced ER'(3)", 60.0),
    7: ("inertia", "Inertia: K_n values and alpha <= bound on all graphs with <= 8 vertices", 600.0),
    8: ("cert-algebra", "Certificate algebra property suite", 60.0),
    9: ("oracles", "Oracle equivalence for alpha (<= 8) and chi (<= 7)", 900.0),
}


def evaluate(number: int):
    claim, title, limit = CRITERIA[number]
    t0 = time.perf_counter()
    res = run_claim(claim)
    elapsed = time.perf_counter() - t0
    failures = ["%s: expected %r, got %r" % (c.name, c.expected, c.actual) for c in res.failed()]
    if claim == "g120":
        # the runtime budget applies to the alpha computation
        timed = res.timings.get("alpha", elapsed)
    else:
        timed = elapsed
    if timed > limit:
        failures.append("runtime %.2fs exceeds %.0fs" % (timed, limit))
    line = "%s  criterion %d  %-14s %7.2fs  %s" % ("PASS" if not failures else "FAIL", number, claim, elapsed, title)
    if failures:
        line += "\n" + "\n".join("        - " + f for f in failures)
    RESULTS[number] = (not failures, line)
    return failures


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    failures = evaluate(number)
    assert not failures, "; ".join(failures)


if __name__ == "__main__":
    for k in sorted(CRITERIA):
        evaluate(k)
        print(RESULTS[k][1], flush=True)
