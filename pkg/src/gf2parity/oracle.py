"""Slow, independent reference implementations for cross-checking.

Everything here uses plain Python lists and per-vertex counting loops.  The
only things borrowed from the rest of the package are the graph types'
edge/arc iterators, so a bug in the packed kernels cannot hide itself.
"""

from __future__ import annotations

from itertools import combinations, product

from gf2parity.errors import ContractViolation

MAX_ORACLE_N = 16


def _refuse(n: int) -> None:
    if n > MAX_ORACLE_N:
        raise ContractViolation(f"oracle refuses n={n} > {MAX_ORACLE_N}")


def _adjacency_lists(n, pairs, symmetric):
    adj = [[] for _ in range(n)]
    for u, v in pairs:
        adj[u].append(v)
        if symmetric:
            adj[v].append(u)
    return adj


def same_part_count(out_adj, s, v):
    count = 0
    for u in out_adj[v]:
        if s[u] == s[v]:
            count += 1
    return count


def partition_is_valid(out_adj, s, kind):
    for v in range(len(s)):
        want = s[v] if kind == "even-odd" else 0
        if same_part_count(out_adj, s, v) % 2 != want:
            return False
    return True


def brute_partition_exists(d, kind):
    """First side vector (in lexicographic order) giving a valid partition, or ``None``."""
    if kind not in ("even-even", "even-odd"):
        raise ContractViolation(f"unknown partition kind {kind!r}")
    _refuse(d.n)
    out_adj = _adjacency_lists(d.n, d.arcs(), symmetric=False)
    for s in product((0, 1), repeat=d.n):
        if partition_is_valid(out_adj, s, kind):
            return list(s)
    return None


def brute_all_partitions(d, kind):
    _refuse(d.n)
    out_adj = _adjacency_lists(d.n, d.arcs(), symmetric=False)
    return [list(s) for s in product((0, 1), repeat=d.n) if partition_is_valid(out_adj, s, kind)]


def subset_satisfies(adj, labels, subset):
    inside = set(subset)
    for v in subset:
        deg = 0
        for u in adj[v]:
            if u in inside:
                deg += 1
        if deg % 2 != labels[v]:
            return False
    return True


def brute_max_parity_subgraph(g, labels):
    """A largest ``U`` with ``deg_{G[U]}(u) = labels[u] (mod 2)`` on ``U``.

    Subsets are tried by decreasing size, so the first hit is maximum.
    """
    _refuse(g.n)
    labels = [int(b) for b in labels]
    if len(labels) != g.n:
        raise ContractViolation("label length does not match graph order")
    adj = _adjacency_lists(g.n, g.edges(), symmetric=True)
    for size in range(g.n, 0, -1):
        for subset in combinations(range(g.n), size):
            if subset_satisfies(adj, labels, subset):
                return set(subset)
    return set()


def brute_max_odd_subgraph(g):
    return brute_max_parity_subgraph(g, [1] * g.n)


# naive GF(2) arithmetic on lists of 0/1 ints


def naive_mat_vec(a, x):
    out = []
    for row in a:
        acc = 0
        for aij, xj in zip(row, x):
            acc += aij * xj
        out.append(acc % 2)
    return out


def naive_rref(a):
    m = [list(r) for r in a]
    rows = len(m)
    cols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if m[i][c] % 2), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        for i in range(rows):
            if i != r and m[i][c] % 2:
                m[i] = [(x + y) % 2 for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def naive_rank(a):
    return len(naive_rref(a)[1])


def naive_solve(a, b):
    n = len(a)
    aug = [list(row) + [b[i]] for i, row in enumerate(a)]
    m, pivots = naive_rref(aug)
    if n in pivots:
        return None
    x = [0] * n
    for i, c in enumerate(pivots):
        x[c] = m[i][n]
    return x


def naive_kernel(a):
    """Every ``x`` with ``a x = 0``, by exhaustive search."""
    n = len(a[0]) if a else 0
    return [list(x) for x in product((0, 1), repeat=n) if not any(naive_mat_vec(a, x))]
