"""Large induced subgraphs with prescribed degree parities.

Given a graph without isolated vertices and labels ``f: V -> {0, 1}``, find
``U`` such that every ``u`` in ``U`` has ``deg_{G[U]}(u) = f(u) (mod 2)``.
With ``V0 = f^-1(0)``, ``n = |V|`` and a threshold ``beta`` in (0, 1/2):

* Case I (``|V0| >= beta*n``): larger side of an even/even Gallai partition of
  ``G[V0]``.
* Case II (few isolated vertices in ``G - V0``): an odd induced subgraph of
  ``G - V0`` with its isolated vertices removed.
* Case III (many isolated vertices ``I`` in ``G - V0``): a minimal set
  ``D`` in ``V0`` dominating ``I``, a subset ``D'`` of ``D``, the vertices of
  ``I`` with an odd number of neighbours in ``D'``, and private neighbours
  used to even out the degrees inside ``D'``.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from gf2parity import gallai, odd_subgraph
from gf2parity.errors import ContractViolation, InvariantViolation
from gf2parity.gf2 import BitVector
from gf2parity.graph import Graph, induced_subgraph, isolated_vertices

DEFAULT_BETA = Fraction(1, 10)
FK_CONSTANT = Fraction(1, 10_000)
RANDOM_RETRY_CAP = 64


class Case(str, enum.Enum):
    I = "CaseI"  # noqa: E741
    II = "CaseII"
    III = "CaseIII"


@dataclass(frozen=True)
class SubgraphResult:
    vertices: frozenset[int]
    case_used: Case | None
    size_bound_claimed: Fraction
    bound_guaranteed: bool = True

    @property
    def size(self) -> int:
        return len(self.vertices)


@dataclass
class CaseIIIState:
    dominating: list[int]
    private: dict[int, int]
    chosen: frozenset[int] = frozenset()
    odd_side: frozenset[int] = frozenset()
    private_side: frozenset[int] = frozenset()
    notes: dict = field(default_factory=dict)

    @property
    def private_vertices(self) -> frozenset[int]:
        return frozenset(self.private.values())

    @property
    def vertices(self) -> frozenset[int]:
        return self.chosen | self.odd_side | self.private_side


def alpha(beta: Fraction = DEFAULT_BETA, c: Fraction = FK_CONSTANT) -> Fraction:
    """Global size fraction guaranteed by the three-case argument."""
    return min(beta / 2, c * beta, (1 - 2 * beta) / 2)


def _labels(f, n: int) -> list[int]:
    if isinstance(f, str):
        f = BitVector.from_string(f)
    bits = f.to_list() if isinstance(f, BitVector) else [int(b) & 1 for b in f]
    if len(bits) != n:
        raise ContractViolation(f"label length {len(bits)} != n={n}")
    return bits


def _beta(beta) -> Fraction:
    beta = Fraction(beta)
    if not 0 < beta < Fraction(1, 2):
        raise ContractViolation(f"beta must lie in (0, 1/2), got {beta}")
    return beta


def check_parities(g: Graph, f, vertices: Iterable[int]) -> dict[int, tuple[int, int]]:
    """Map each vertex of ``U`` to ``(degree in G[U], label)``, counted directly."""
    labels = _labels(f, g.n)
    s = set(vertices)
    return {v: (sum(1 for u in g.neighbors[v] if u in s), labels[v]) for v in sorted(s)}


def satisfies_parities(g: Graph, f, vertices: Iterable[int]) -> bool:
    return all(d % 2 == lab for d, lab in check_parities(g, f, vertices).values())


def case1(g: Graph, v0: Iterable[int]) -> frozenset[int]:
    """Larger part (at least half) of an even/even Gallai partition of ``G[V0]``."""
    sub, index_map = induced_subgraph(g, v0)
    if sub.n == 0:
        raise ContractViolation("Case I needs a nonempty V0")
    part = gallai.even_even_partition(sub)
    a, b = part.v1, part.v0
    larger = b if len(b) >= len(a) else a
    return frozenset(index_map[i] for i in larger)


def case2(g: Graph, v0: Iterable[int], seed: int | None = None,
          threshold: int = odd_subgraph.EXACT_THRESHOLD) -> frozenset[int]:
    """Odd induced subgraph of ``G - V0 - I`` where ``I`` is isolated in ``G - V0``."""
    v0 = set(v0)
    rest, index_map = induced_subgraph(g, (v for v in range(g.n) if v not in v0))
    iso = isolated_vertices(rest)
    core, core_map = induced_subgraph(rest, (v for v in range(rest.n) if v not in iso))
    if core.n == 0:
        return frozenset()
    found = odd_subgraph.odd_subgraph(core, seed=seed, threshold=threshold)
    return frozenset(index_map[core_map[i]] for i in found)


def minimal_dominating_set(g: Graph, targets: Iterable[int], candidates: Iterable[int]):
    """Minimal ``D`` among ``candidates`` dominating ``targets``, with private neighbours.

    Greedy cover by descending number of newly covered targets (ties to the
    lower index), then a pruning pass in index order.  Returns ``(D, private)``
    where ``private[w]`` is the smallest target whose only neighbour in ``D`` is ``w``.
    """
    targets = set(targets)
    candidates = set(candidates)
    cover = {w: targets.intersection(g.neighbors[w]) for w in candidates}
    for u in targets:
        if not any(w in candidates for w in g.neighbors[u]):
            raise ContractViolation(f"vertex {u} has no neighbour among the candidates")

    uncovered = set(targets)
    chosen: list[int] = []
    while uncovered:
        w = min(candidates - set(chosen), key=lambda x: (-len(cover[x] & uncovered), x))
        chosen.append(w)
        uncovered -= cover[w]

    d = set(chosen)
    hits = {u: sum(1 for w in g.neighbors[u] if w in d) for u in targets}
    for w in sorted(chosen):
        if all(hits[u] > 1 for u in cover[w]):
            d.remove(w)
            for u in cover[w]:
                hits[u] -= 1

    private = {}
    for w in sorted(d):
        owned = [u for u in sorted(cover[w]) if hits[u] == 1]
        if not owned:
            raise InvariantViolation(f"dominating vertex {w} has no private neighbour")
        private[w] = owned[0]
    return sorted(d), private


def _complete_case3(g: Graph, targets: set[int], state: CaseIIIState, chosen: set[int]) -> CaseIIIState:
    private_vertices = state.private_vertices
    odd_side = {
        u for u in targets - private_vertices
        if sum(1 for w in g.neighbors[u] if w in chosen) % 2 == 1
    }
    base = chosen | odd_side
    private_side = {
        state.private[w] for w in chosen
        if sum(1 for x in g.neighbors[w] if x in base) % 2 == 1
    }
    state.chosen = frozenset(chosen)
    state.odd_side = frozenset(odd_side)
    state.private_side = frozenset(private_side)
    return state


def _derandomized_choice(g: Graph, targets: set[int], d: list[int], private_vertices) -> set[int]:
    """Fix membership of each ``w`` in ``D`` in index order by conditional expectations.

    The objective is ``|D'| + |I0|``: an undecided ``w`` contributes 1/2, and a
    target outside the private set contributes 1/2 while any of its ``D``
    neighbours is undecided, otherwise 1 or 0 by the parity of its chosen neighbours.
    """
    dset = set(d)
    others = [u for u in targets if u not in private_vertices]
    d_nbrs = {u: [w for w in g.neighbors[u] if w in dset] for u in others}
    remaining = {u: len(d_nbrs[u]) for u in others}
    parity = {u: 0 for u in others}
    watchers: dict[int, list[int]] = {w: [] for w in d}
    for u in others:
        for w in d_nbrs[u]:
            watchers[w].append(u)

    chosen: set[int] = set()
    for w in sorted(d):
        # only targets whose last undecided neighbour is w change their expectation
        gain = {0: Fraction(0), 1: Fraction(1)}
        for u in watchers[w]:
            if remaining[u] == 1:
                for bit in (0, 1):
                    gain[bit] += (parity[u] ^ bit) - Fraction(1, 2)
        bit = 1 if gain[1] >= gain[0] else 0
        if bit:
            chosen.add(w)
        for u in watchers[w]:
            remaining[u] -= 1
            parity[u] ^= bit
    return chosen


def case3(g: Graph, v0: Iterable[int], targets: Iterable[int], mode: str = "derandomized",
          seed: int | None = None) -> CaseIIIState:
    """Build ``U = D' + I0 + I1`` for targets ``I`` independent in ``G - V0``.

    ``mode="derandomized"`` always reaches ``|U| >= ceil(|I| / 2)``.
    ``mode="random"`` draws ``D'`` uniformly with ``seed`` and redraws until the
    bound holds, falling back to the derandomized choice after
    ``RANDOM_RETRY_CAP`` draws.
    """
    v0 = set(v0)
    targets = set(targets)
    for u in targets:
        if u in v0:
            raise ContractViolation(f"target {u} lies in V0")
        if any(x in targets for x in g.neighbors[u]):
            raise ContractViolation(f"targets are not independent (vertex {u})")
    d, private = minimal_dominating_set(g, targets, v0)
    state = CaseIIIState(dominating=d, private=private)
    need = math.ceil(len(targets) / 2)

    if mode == "random":
        rng = random.Random(seed)
        for attempt in range(1, RANDOM_RETRY_CAP + 1):
            chosen = {w for w in d if rng.random() < 0.5}
            _complete_case3(g, targets, state, chosen)
            if len(state.vertices) >= need:
                state.notes["attempts"] = attempt
                return state
        state.notes["fallback"] = True
    elif mode != "derandomized":
        raise ContractViolation(f"unknown Case III mode {mode!r}")

    chosen = _derandomized_choice(g, targets, d, state.private_vertices)
    return _complete_case3(g, targets, state, chosen)


def dispatch(n: int, n0: int, n_isolated: int | None, beta: Fraction = DEFAULT_BETA) -> Case:
    """Which case applies; ``|I| == (1 - 2 beta) n`` goes to Case II."""
    if n0 >= beta * n:
        return Case.I
    if n_isolated is None:
        raise ContractViolation("isolated-vertex count needed when Case I does not apply")
    return Case.II if n_isolated <= (1 - 2 * beta) * n else Case.III


def find_parity_subgraph(
    g: Graph,
    f,
    beta=DEFAULT_BETA,
    mode: str = "strict",
    case3_mode: str = "derandomized",
    seed: int | None = 0,
) -> SubgraphResult:
    """Induced subgraph on which 0-labelled vertices have even and 1-labelled odd degree.

    ``mode="strict"`` runs only the case selected by the three thresholds;
    ``mode="best-effort"`` runs every applicable case and keeps the largest
    result.  ``size_bound_claimed`` is the bound of the case that produced the
    answer; for Case II it is ``c * beta * n`` from the odd-subgraph theorem,
    which is only guaranteed (``bound_guaranteed``) when the exact search ran.
    """
    beta = _beta(beta)
    labels = _labels(f, g.n)
    if mode not in ("strict", "best-effort"):
        raise ContractViolation(f"unknown mode {mode!r}")
    iso = isolated_vertices(g)
    if iso:
        raise ContractViolation(f"graph has isolated vertex {min(iso)}")
    n = g.n
    if n == 0:
        return SubgraphResult(frozenset(), None, Fraction(0))

    v0 = [v for v in range(n) if labels[v] == 0]
    v0_set = set(v0)
    rest = [v for v in range(n) if v not in v0_set]
    rest_graph, rest_map = induced_subgraph(g, rest)
    isolated = {rest_map[i] for i in isolated_vertices(rest_graph)}
    chosen_case = dispatch(n, len(v0), len(isolated), beta)

    def run(case: Case) -> SubgraphResult:
        if case is Case.I:
            u = case1(g, v0)
            return SubgraphResult(u, case, Fraction(len(v0), 2))
        if case is Case.II:
            u = case2(g, v0, seed=seed)
            exact = n - len(v0) - len(isolated) <= odd_subgraph.EXACT_THRESHOLD
            return SubgraphResult(u, case, FK_CONSTANT * beta * n, bound_guaranteed=exact)
        state = case3(g, v0, isolated, mode=case3_mode, seed=seed)
        return SubgraphResult(state.vertices, case, Fraction(len(isolated), 2))

    if mode == "strict":
        result = run(chosen_case)
    else:
        applicable = []
        if v0:
            applicable.append(Case.I)
        if len(rest) > len(isolated):
            applicable.append(Case.II)
        if isolated:
            applicable.append(Case.III)
        results = [run(c) for c in applicable]
        # prefer the dispatched case on ties
        result = max(results, key=lambda r: (r.size, r.case_used is chosen_case))

    if not satisfies_parities(g, labels, result.vertices):
        raise InvariantViolation(f"{result.case_used} produced a set violating the parities")
    return result
