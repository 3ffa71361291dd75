"""Gallai partitions of undirected graphs, built from GF(2) systems.

With ``M`` the (symmetric) adjacency matrix and ``p`` the degree-parity
vector, solutions of ``(M + diag(p)) s = p`` give even/even partitions and
solutions of ``(M + I + diag(p)) s = p`` give partitions whose V1 side induces
odd degrees and V0 side even degrees.  Gallai's theorem says both systems are
always consistent, so an inconsistent solve is reported as a bug.
"""

from __future__ import annotations

from gf2parity.errors import InvariantViolation
from gf2parity.gf2 import BitMatrix, BitVector, solve
from gf2parity.graph import Graph, Partition, degree_parity_vector


def even_even_system(g: Graph) -> tuple[BitMatrix, BitVector]:
    p = degree_parity_vector(g)
    return g.adjacency.add_diagonal(p), p


def odd_even_system(g: Graph) -> tuple[BitMatrix, BitVector]:
    p = degree_parity_vector(g)
    return g.adjacency.add_diagonal(p ^ BitVector.ones(g.n)), p


def _solve_or_fail(a: BitMatrix, b: BitVector, what: str) -> Partition:
    s = solve(a, b)
    if s is None:
        raise InvariantViolation(f"{what} system inconsistent; Gallai's theorem guarantees a solution")
    return Partition(s)


def even_even_partition(g: Graph) -> Partition:
    """Partition V so that both G[V0] and G[V1] have all degrees even.

    Parts are reported as the solver returns them; either may be empty.
    """
    return _solve_or_fail(*even_even_system(g), "even-even")


def odd_even_partition(g: Graph) -> Partition:
    """Partition V so that G[V1] has all degrees odd and G[V0] all degrees even."""
    return _solve_or_fail(*odd_even_system(g), "odd-even")


def check_gallai(g: Graph, part: Partition, v1_parity: int) -> bool:
    """Direct degree count: V0 vertices even inside V0, V1 vertices of parity
    ``v1_parity`` inside V1."""
    side = part.side.to_list()
    for v in range(g.n):
        same = sum(1 for u in g.neighbors[v] if side[u] == side[v])
        want = v1_parity if side[v] else 0
        if same % 2 != want:
            return False
    return True
