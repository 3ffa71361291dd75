import numpy as np
import pytest

from gf2parity.gf2 import BitMatrix
from gf2parity.graph import Digraph, Graph


def random_graph(rng, n, p):
    upper = np.triu(rng.random((n, n)) < p, k=1)
    return Graph(BitMatrix.from_dense(upper | upper.T))


def random_digraph(rng, n, p):
    dense = rng.random((n, n)) < p
    np.fill_diagonal(dense, False)
    return Digraph(BitMatrix.from_dense(dense))


def digraph_from_mask(n, mask):
    """Digraph whose arcs are the set bits of ``mask`` over the n*(n-1) ordered pairs."""
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    return Digraph.from_arcs(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def graph_from_mask(n, mask):
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


def directed_cycle(n):
    return Digraph.from_arcs(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def degree_inside(g, subset, v):
    return sum(1 for u in g.neighbors[v] if u in subset)


@pytest.fixture
def rng():
    return np.random.default_rng(20241015)


ACCEPTANCE_LINES = []


def record_acceptance(number, ok, detail):
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
