"""Simple graphs and loopless digraphs backed by a packed adjacency matrix."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from gf2parity.errors import ContractViolation
from gf2parity.gf2 import BitMatrix, BitVector


class _AdjacencyBase:
    adjacency: BitMatrix

    @property
    def n(self) -> int:
        return self.adjacency.rows

    def __len__(self) -> int:
        return self.n

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ContractViolation(f"vertex {v} out of range 0..{self.n - 1}")

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((type(self).__name__, self.adjacency))


def _dense_from_pairs(n: int, pairs: Iterable[tuple[int, int]], symmetric: bool) -> np.ndarray:
    dense = np.zeros((n, n), dtype=np.uint8)
    for u, v in pairs:
        if not (0 <= u < n and 0 <= v < n):
            raise ContractViolation(f"endpoint out of range in ({u}, {v}) for n={n}")
        if u == v:
            raise ContractViolation(f"self-loop at vertex {u}")
        dense[u, v] = 1
        if symmetric:
            dense[v, u] = 1
    return dense


class Graph(_AdjacencyBase):
    """Simple undirected graph on vertices ``0..n-1``."""

    def __init__(self, adjacency: BitMatrix):
        if not adjacency.is_square():
            raise ContractViolation("adjacency matrix must be square")
        if adjacency.diagonal().any():
            raise ContractViolation("graph has a self-loop")
        if not adjacency.is_symmetric():
            raise ContractViolation("undirected adjacency must be symmetric")
        self.adjacency = adjacency

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        return cls(BitMatrix.from_dense(_dense_from_pairs(n, edges, symmetric=True)))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(BitMatrix.zeros(n))

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        dense = self.adjacency.to_dense()
        return tuple(tuple(np.flatnonzero(row).tolist()) for row in dense)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in enumerate(self.neighbors):
            for v in nbrs:
                if u < v:
                    yield u, v

    @property
    def m(self) -> int:
        return int(self.adjacency.row_popcounts().sum()) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


class Digraph(_AdjacencyBase):
    """Loopless digraph; ``adjacency[u, v] == 1`` iff the arc ``u -> v`` exists."""

    def __init__(self, adjacency: BitMatrix):
        if not adjacency.is_square():
            raise ContractViolation("adjacency matrix must be square")
        if adjacency.diagonal().any():
            raise ContractViolation("digraph has a loop")
        self.adjacency = adjacency

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
        return cls(BitMatrix.from_dense(_dense_from_pairs(n, arcs, symmetric=False)))

    @classmethod
    def empty(cls, n: int) -> Digraph:
        return cls(BitMatrix.zeros(n))

    @cached_property
    def out_neighbors(self) -> tuple[tuple[int, ...], ...]:
        dense = self.adjacency.to_dense()
        return tuple(tuple(np.flatnonzero(row).tolist()) for row in dense)

    def out_degree(self, v: int) -> int:
        return len(self.out_neighbors[v])

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u, nbrs in enumerate(self.out_neighbors):
            for v in nbrs:
                yield u, v

    @property
    def m(self) -> int:
        return int(self.adjacency.row_popcounts().sum())

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Partition:
    """Two-part vertex partition; bit ``v`` of ``side`` is 1 iff ``v`` is in V1."""

    side: BitVector

    @property
    def n(self) -> int:
        return len(self.side)

    @property
    def v0(self) -> frozenset[int]:
        return frozenset(v for v, b in enumerate(self.side.to_list()) if not b)

    @property
    def v1(self) -> frozenset[int]:
        return frozenset(self.side.indices())

    @classmethod
    def from_parts(cls, n: int, v1: Iterable[int]) -> Partition:
        return cls(BitVector.from_indices(n, v1))

    def __str__(self) -> str:
        return self.side.to_string()


def symmetrize(g: Graph) -> Digraph:
    """Replace every edge by two opposite arcs."""
    return Digraph(g.adjacency.copy())


def out_parity_vector(d: Digraph) -> BitVector:
    """Bit ``v`` is the out-degree of ``v`` mod 2."""
    return BitVector.from_bits((d.adjacency.row_popcounts() & 1).astype(np.uint8))


def degree_parity_vector(g: Graph) -> BitVector:
    """Bit ``v`` is ``deg(v)`` mod 2."""
    return BitVector.from_bits((g.adjacency.row_popcounts() & 1).astype(np.uint8))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Return ``G[S]`` relabelled to ``0..|S|-1`` and the map new index -> old vertex.

    The map lists the vertices of ``S`` in increasing order.
    """
    index_map = sorted(set(vertices))
    for v in index_map:
        g._check_vertex(v)
    if not index_map:
        return Graph.empty(0), []
    idx = np.array(index_map)
    dense = g.adjacency.to_dense()[np.ix_(idx, idx)]
    return Graph(BitMatrix.from_dense(dense)), index_map


def isolated_vertices(g: Graph) -> frozenset[int]:
    return frozenset(np.flatnonzero(g.adjacency.row_popcounts() == 0).tolist())


def degrees_within(g: Graph, vertices: Iterable[int]) -> dict[int, int]:
    """Degree of each vertex of ``S`` inside ``G[S]``."""
    s = set(vertices)
    return {v: sum(1 for u in g.neighbors[v] if u in s) for v in s}
