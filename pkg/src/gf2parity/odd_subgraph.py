"""Odd induced subgraphs: exact search for small graphs, local search otherwise.

The linear lower bound for graphs without isolated vertices is a known
theorem whose proof does not give a usable procedure here, so the heuristic
only promises a *valid* set (every vertex has odd degree inside it) of size
at least two.
"""

from __future__ import annotations

import random

import numpy as np

from gf2parity import gallai
from gf2parity.errors import ContractViolation
from gf2parity.graph import Graph, isolated_vertices

EXACT_THRESHOLD = 20


def is_odd_induced(g: Graph, vertices) -> bool:
    s = set(vertices)
    return all(sum(1 for u in g.neighbors[v] if u in s) % 2 == 1 for v in s)


def exact_max_odd_subgraph(g: Graph, threshold: int = EXACT_THRESHOLD) -> frozenset[int]:
    """Maximum odd induced subgraph by evaluating every vertex subset.

    All ``2**n`` subsets are scored at once as integer bitmasks.  Among subsets
    of maximum size the numerically smallest mask wins, so the result is
    deterministic.  Returns the empty set when nothing nonempty qualifies.
    """
    n = g.n
    if n > threshold:
        raise ContractViolation(f"exact search refuses n={n} > {threshold}; use the heuristic")
    if n == 0:
        return frozenset()
    masks = np.arange(1 << n, dtype=np.int64)
    valid = np.ones(masks.shape, dtype=bool)
    for v in range(n):
        nb = sum(1 << u for u in g.neighbors[v])
        member = ((masks >> v) & 1).astype(bool)
        odd = (np.bitwise_count(masks & nb) & 1).astype(bool)
        valid &= ~member | odd
    sizes = np.bitwise_count(masks).astype(np.int64)
    sizes[~valid] = -1
    best = int(np.argmax(sizes))
    return frozenset(v for v in range(n) if best >> v & 1)


class _LocalSearch:
    """Membership vector plus in-set degree counts, with O(deg) toggles."""

    def __init__(self, g: Graph, members):
        self.nbrs = g.neighbors
        self.n = g.n
        self.inside = [False] * self.n
        self.deg = [0] * self.n
        self.bad: set[int] = set()
        self.size = 0
        for v in members:
            self.toggle(v)

    def _refresh(self, v: int) -> None:
        if self.inside[v] and self.deg[v] % 2 == 0:
            self.bad.add(v)
        else:
            self.bad.discard(v)

    def toggle(self, x: int) -> None:
        step = -1 if self.inside[x] else 1
        self.inside[x] = not self.inside[x]
        self.size += step
        for y in self.nbrs[x]:
            self.deg[y] += step
            if self.inside[y]:
                self._refresh(y)
        self._refresh(x)

    def bad_delta(self, x: int) -> int:
        """Change in the number of violating vertices if ``x`` were toggled."""
        delta = 0
        for y in self.nbrs[x]:
            if self.inside[y]:
                delta += -1 if y in self.bad else 1
        if self.inside[x]:
            delta -= 1 if x in self.bad else 0
        elif self.deg[x] % 2 == 0:
            delta += 1
        return delta

    def members(self) -> frozenset[int]:
        return frozenset(v for v in range(self.n) if self.inside[v])


def _search(g: Graph, start, rng: random.Random, steps: int, sample: int) -> frozenset[int]:
    state = _LocalSearch(g, start)
    best: frozenset[int] = frozenset()
    outside_pool = list(range(g.n))
    for _ in range(steps):
        if not state.bad:
            if state.size > len(best):
                best = state.members()
            # grow: try to absorb a vertex and repair from there
            x = rng.choice(outside_pool)
            if not state.inside[x]:
                state.toggle(x)
            continue
        v = rng.choice(tuple(state.bad))
        nb = state.nbrs[v]
        moves = [v] + (rng.sample(nb, sample) if len(nb) > sample else list(nb))
        if rng.random() < 0.1:
            state.toggle(rng.choice(moves))
            continue
        scored = [
            (3 * state.bad_delta(x) + (1 if state.inside[x] else -1), rng.random(), x)
            for x in moves
        ]
        state.toggle(min(scored)[2])
    if not state.bad and state.size > len(best):
        best = state.members()
    return best


def heuristic_odd_subgraph(
    g: Graph,
    seed: int | None = None,
    restarts: int = 4,
    steps: int | None = None,
    sample: int = 6,
) -> frozenset[int]:
    """Best-effort large odd induced subgraph of a graph without isolated vertices.

    Candidates are the odd side of a Gallai odd/even partition and the results of
    randomized local search (repair parity violations by toggling a violating
    vertex or one of its neighbours, absorb a new vertex whenever the set is
    valid).  The largest valid candidate is returned; a single edge is the
    fallback, so the answer always has at least two vertices when ``n > 0``.
    """
    iso = isolated_vertices(g)
    if iso:
        raise ContractViolation(f"graph has isolated vertex {min(iso)}")
    if g.n == 0:
        return frozenset()
    rng = random.Random(seed)
    if steps is None:
        steps = 8 * g.n + 200

    u, v = next(g.edges())
    best = frozenset((u, v))
    gallai_side = gallai.odd_even_partition(g).v1
    if len(gallai_side) > len(best):
        best = gallai_side
    for r in range(restarts):
        if r == 0 and gallai_side:
            start = gallai_side
        else:
            start = [x for x in range(g.n) if rng.random() < 0.5]
        found = _search(g, start, rng, steps, sample)
        if len(found) > len(best):
            best = found
    return best


def odd_subgraph(g: Graph, seed: int | None = None, threshold: int = EXACT_THRESHOLD) -> frozenset[int]:
    """Exact search when ``n <= threshold``, heuristic otherwise."""
    if g.n <= threshold:
        return exact_max_odd_subgraph(g, threshold)
    return heuristic_odd_subgraph(g, seed=seed)
