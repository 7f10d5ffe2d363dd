import itertools
import random

import pytest

from qgraph._backend import get_kernels
from qgraph.graphcore import Graph, from_edges


def _available_backends():
    out = ["python"]
    try:
        get_kernels("cython")
        out.append("cython")
    except ImportError:
        pass
    return out


BACKENDS = _available_backends()


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return from_edges(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def complete(n: int) -> Graph:
    return from_edges(n, itertools.combinations(range(n), 2))


def cycle(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if not test_acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(test_acceptance.RESULTS):
        terminalreporter.write_line(test_acceptance.RESULTS[k][1])
