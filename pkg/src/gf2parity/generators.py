"""Seeded random and structured instance generators."""

from __future__ import annotations

import numpy as np

from gf2parity.digraph_parity import random_even_out_digraph, remark_family_generate
from gf2parity.errors import ContractViolation
from gf2parity.gf2 import BitMatrix, BitVector
from gf2parity.graph import Digraph, Graph


def _check_p(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise ContractViolation(f"probability must lie in [0, 1], got {p}")


def _check_n(n: int, low: int = 0) -> None:
    if n < low:
        raise ContractViolation(f"size must be at least {low}, got {n}")


def gnp(n: int, p: float, seed: int | None = None) -> Graph:
    _check_n(n)
    _check_p(p)
    rng = np.random.default_rng(seed)
    upper = np.triu(rng.random((n, n)) < p, k=1)
    return Graph(BitMatrix.from_dense(upper | upper.T))


def gnp_digraph(n: int, p: float, seed: int | None = None) -> Digraph:
    _check_n(n)
    _check_p(p)
    rng = np.random.default_rng(seed)
    dense = rng.random((n, n)) < p
    np.fill_diagonal(dense, False)
    return Digraph(BitMatrix.from_dense(dense))


def without_isolated(g: Graph, seed: int | None = None) -> Graph:
    """Attach every isolated vertex to a random other vertex (needs ``n >= 2``)."""
    if g.n == 1:
        raise ContractViolation("a single vertex is always isolated")
    rng = np.random.default_rng(seed)
    dense = g.adjacency.to_dense().copy()
    for v in np.flatnonzero(dense.sum(axis=1) == 0):
        u = int(rng.integers(g.n - 1))
        u += u >= v
        dense[v, u] = dense[u, v] = 1
    return Graph(BitMatrix.from_dense(dense))


def star(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 0."""
    _check_n(leaves, 1)
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def star_labels(leaves: int) -> BitVector:
    """Centre labelled 0, leaves labelled 1."""
    return BitVector.from_bits([0] + [1] * leaves)


def matching(pairs: int) -> Graph:
    _check_n(pairs)
    return Graph.from_edges(2 * pairs, [(2 * i, 2 * i + 1) for i in range(pairs)])


def random_labels(n: int, zero_prob: float, seed: int | None = None) -> BitVector:
    _check_p(zero_prob)
    rng = np.random.default_rng(seed)
    return BitVector.from_bits((rng.random(n) >= zero_prob).astype(np.uint8))


def hub_graph(hubs: int, leaves: int, p: float, seed: int | None = None) -> tuple[Graph, BitVector]:
    """Few 0-labelled hubs, many independent 1-labelled leaves, each leaf joined
    to a nonempty random set of hubs; hubs are joined among themselves with
    probability ``p``.  The leaves are isolated once the hubs are removed."""
    _check_n(hubs, 1)
    _check_n(leaves)
    _check_p(p)
    rng = np.random.default_rng(seed)
    n = hubs + leaves
    dense = np.zeros((n, n), dtype=bool)
    upper = np.triu(rng.random((hubs, hubs)) < p, k=1)
    dense[:hubs, :hubs] = upper | upper.T
    for leaf in range(hubs, n):
        row = rng.random(hubs) < max(p, 1.0 / hubs)
        if not row.any():
            row[rng.integers(hubs)] = True
        dense[leaf, :hubs] = row
        dense[:hubs, leaf] = row
    g = without_isolated(Graph(BitMatrix.from_dense(dense)), seed=rng.integers(1 << 31))
    return g, BitVector.from_bits([0] * hubs + [1] * leaves)


def remark_instance(w: int, u: int, p: float = 0.5, seed: int | None = None) -> Digraph:
    """Random member of the family of digraphs admitting both partition kinds."""
    _check_n(w)
    _check_n(u)
    rng = np.random.default_rng(seed)
    sym = gnp(w, p, seed=rng.integers(1 << 31))
    even = random_even_out_digraph(u, p, seed=rng.integers(1 << 31))
    return remark_family_generate(sym, even, cross_arc_seed=int(rng.integers(1 << 31)), density=p)
