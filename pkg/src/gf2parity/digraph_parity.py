"""Even-even and even-odd out-degree partitions of digraphs.

For a side vector ``s`` (``s_v = 1`` iff ``v`` is in V1) the parity of the
number of out-neighbours of ``v`` lying in ``v``'s own part is

    P_v(s) = sum over arcs v->u of [s_u == s_v] = (M s)_v + p_v s_v + p_v   (mod 2)

because ``[s_u == s_v] = 1 + s_u + s_v`` over GF(2) and the arc count is
``p_v`` mod 2.  Requiring ``P_v(s) = 0`` everywhere gives
``(M + diag(p)) s = p``; requiring ``P_v(s) = s_v`` gives
``(M + I + diag(p)) s = p``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from gf2parity import gallai
from gf2parity.errors import ContractViolation
from gf2parity.gf2 import BitMatrix, BitVector, mat_vec, solution_space, span
from gf2parity.graph import Digraph, Graph, Partition, out_parity_vector


class Kind(str, enum.Enum):
    EVEN_EVEN = "even-even"
    EVEN_ODD = "even-odd"


@dataclass(frozen=True)
class ParityWitness:
    """A partition together with ``P_v(s)`` for every vertex, counted directly."""

    partition: Partition
    per_vertex_check: BitVector

    def is_valid(self, kind: Kind) -> bool:
        if kind is Kind.EVEN_EVEN:
            return not self.per_vertex_check.any()
        return self.per_vertex_check == self.partition.side


@dataclass(frozen=True)
class SolutionSet:
    """All side vectors solving a partition system: ``particular + span(kernel)``."""

    kind: Kind
    particular: BitVector | None
    kernel: list[BitVector]

    @property
    def exists(self) -> bool:
        return self.particular is not None

    @property
    def kernel_dim(self) -> int:
        return len(self.kernel)

    @property
    def count(self) -> int:
        return (1 << len(self.kernel)) if self.exists else 0


def system(d: Digraph, kind: Kind | str) -> tuple[BitMatrix, BitVector]:
    kind = Kind(kind)
    p = out_parity_vector(d)
    diag = p if kind is Kind.EVEN_EVEN else p ^ BitVector.ones(d.n)
    return d.adjacency.add_diagonal(diag), p


def solution_set(d: Digraph, kind: Kind | str) -> SolutionSet:
    kind = Kind(kind)
    a, p = system(d, kind)
    x0, kernel = solution_space(a, p)
    return SolutionSet(kind, x0, kernel)


def same_part_out_parity(d: Digraph, s: BitVector, v: int) -> int:
    """Parity of the number of out-neighbours ``u`` of ``v`` with ``s_u == s_v``,
    counted arc by arc."""
    if len(s) != d.n:
        raise ContractViolation(f"side vector length {len(s)} != n={d.n}")
    sv = s[v]
    return sum(1 for u in d.out_neighbors[v] if s[u] == sv) & 1


def same_part_out_parity_algebraic(d: Digraph, s: BitVector) -> BitVector:
    """``(M s) + p * s + p`` for all vertices at once."""
    p = out_parity_vector(d)
    return mat_vec(d.adjacency, s) ^ (p & s) ^ p


def witness(d: Digraph, part: Partition) -> ParityWitness:
    s = part.side.to_numpy()
    bits = np.zeros(d.n, dtype=np.uint8)
    for v, outs in enumerate(d.out_neighbors):
        bits[v] = sum(1 for u in outs if s[u] == s[v]) & 1
    return ParityWitness(part, BitVector.from_bits(bits))


def _find(d: Digraph, kind: Kind) -> Partition | None:
    sols = solution_set(d, kind)
    return Partition(sols.particular) if sols.exists else None


def even_even_partition(d: Digraph) -> Partition | None:
    """Partition with every vertex having an even number of out-neighbours in its own part.

    Returns the solver's particular solution, or ``None`` when no such partition exists.
    """
    return _find(d, Kind.EVEN_EVEN)


def even_odd_partition(d: Digraph) -> Partition | None:
    """Partition with even same-part out-degree on V0 and odd on V1, or ``None``."""
    return _find(d, Kind.EVEN_ODD)


def partition(d: Digraph, kind: Kind | str) -> Partition | None:
    return _find(d, Kind(kind))


def enumerate_partitions(d: Digraph, kind: Kind | str, limit: int | None = None) -> list[Partition]:
    """Distinct valid partitions (particular solution plus kernel coset), at most ``limit``."""
    sols = solution_set(d, kind)
    if not sols.exists:
        return []
    return [Partition(sols.particular ^ k) for k in span(sols.kernel, d.n, limit)]


def nonempty_partition(d: Digraph, kind: Kind | str) -> Partition | None:
    """A valid partition with both V0 and V1 nonempty, or ``None`` if there is none.

    Only the all-zero and all-one side vectors are excluded, so among any three
    distinct coset members one qualifies; at most three candidates are examined.
    """
    sols = solution_set(d, kind)
    if not sols.exists:
        return None
    for s in span(sols.kernel, d.n, limit=3):
        cand = sols.particular ^ s
        if 0 < cand.popcount() < d.n:
            return Partition(cand)
    return None


def remark_family_generate(
    symmetric_part: Graph,
    even_part: Digraph,
    cross_arc_seed: int | None = None,
    density: float = 0.5,
) -> Digraph:
    """Build a digraph that admits both an even-even and an even-odd partition.

    ``symmetric_part`` becomes a symmetric digraph on ``W = 0..|W|-1``; ``even_part``
    (all out-degrees even) is placed on ``U = |W|..|W|+|U|-1``.  Arcs are added only
    from U to W, and each ``x`` in U sends an even number of arcs into ``W0`` (V0 of
    an even-even Gallai partition of W) and into ``W0'`` (V0 of an odd-even one).
    ``density`` is the inclusion probability before the parity fix-up; 0 adds no
    cross arcs.
    """
    if out_parity_vector(even_part).any():
        bad = out_parity_vector(even_part).indices()[0]
        raise ContractViolation(f"even_part vertex {bad} has odd out-degree")
    if not 0.0 <= density <= 1.0:
        raise ContractViolation(f"density must lie in [0, 1], got {density}")
    rng = np.random.default_rng(cross_arc_seed)
    nw, nu = symmetric_part.n, even_part.n
    w0 = gallai.even_even_partition(symmetric_part).v0
    w0p = gallai.odd_even_partition(symmetric_part).v0
    everything = set(range(nw))
    blocks = [
        sorted(w0 & w0p),
        sorted(w0 - w0p),
        sorted(w0p - w0),
        sorted(everything - w0 - w0p),
    ]

    dense = np.zeros((nw + nu, nw + nu), dtype=np.uint8)
    dense[:nw, :nw] = symmetric_part.adjacency.to_dense()
    dense[nw:, nw:] = even_part.adjacency.to_dense()
    for x in range(nu):
        for block in blocks:
            if not block:
                continue
            chosen = rng.random(len(block)) < density
            if chosen.sum() % 2:
                chosen[rng.integers(len(block))] ^= True
            for w in np.asarray(block)[chosen]:
                dense[nw + x, w] = 1
    return Digraph(BitMatrix.from_dense(dense))


def random_even_out_digraph(n: int, p: float, seed: int | None = None) -> Digraph:
    """Random digraph whose out-degrees are all even (drop one arc where odd)."""
    rng = np.random.default_rng(seed)
    dense = (rng.random((n, n)) < p).astype(np.uint8)
    np.fill_diagonal(dense, 0)
    for v in range(n):
        outs = np.flatnonzero(dense[v])
        if outs.size % 2:
            dense[v, outs[rng.integers(outs.size)]] = 0
    return Digraph(BitMatrix.from_dense(dense))
