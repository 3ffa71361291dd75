import numpy as np
import pytest

from gf2parity import digraph_parity as dp
from gf2parity import oracle
from gf2parity.errors import ContractViolation
from gf2parity.gf2 import BitVector
from gf2parity.graph import Digraph, Graph, Partition

from conftest import digraph_from_mask, directed_cycle, random_digraph, random_graph


def count_same_part(d, s, v):
    return sum(1 for u in d.out_neighbors[v] if s[u] == s[v])


def valid(d, part, kind):
    s = part.side.to_list()
    for v in range(d.n):
        want = s[v] if kind == "even-odd" else 0
        if count_same_part(d, s, v) % 2 != want:
            return False
    return True


class TestCounterexamples:
    def test_directed_triangle_has_no_even_even(self):
        assert dp.even_even_partition(directed_cycle(3)) is None

    def test_directed_edge_has_no_even_odd(self):
        assert dp.even_odd_partition(Digraph.from_arcs(2, [(0, 1)])) is None


def test_edgeless_even_even_has_empty_v1():
    part = dp.even_even_partition(Digraph.empty(3))
    assert part is not None and part.v1 == set()


def test_single_vertex_even_odd():
    part = dp.even_odd_partition(Digraph.empty(1))
    assert part.v1 == set() and part.v0 == {0}


def test_two_cycle_even_even_splits():
    d = Digraph.from_arcs(2, [(0, 1), (1, 0)])
    part = dp.even_even_partition(d)
    assert len(part.v1) == 1


class TestSamePartParity:
    def test_sink_vertex_is_always_zero(self, rng):
        d = Digraph.from_arcs(3, [(0, 1), (1, 0)])
        for bits in range(8):
            s = BitVector.from_bits([bits >> i & 1 for i in range(3)])
            assert dp.same_part_out_parity(d, s, 2) == 0

    def test_triangle_all_in_v0(self):
        d = directed_cycle(3)
        for v in range(3):
            assert dp.same_part_out_parity(d, BitVector.zeros(3), v) == 1

    def test_formula_matches_count_random(self, rng):
        for _ in range(200):
            d = random_digraph(rng, 10, rng.random())
            s = BitVector.from_bits(rng.integers(0, 2, 10))
            algebraic = dp.same_part_out_parity_algebraic(d, s)
            for v in range(10):
                assert dp.same_part_out_parity(d, s, v) == algebraic[v]

    def test_formula_exhaustive_n3(self):
        for mask in range(1 << 6):
            d = digraph_from_mask(3, mask)
            for bits in range(8):
                s = BitVector.from_bits([bits >> i & 1 for i in range(3)])
                alg = dp.same_part_out_parity_algebraic(d, s)
                assert [dp.same_part_out_parity(d, s, v) for v in range(3)] == alg.to_list()

    def test_length_checked(self):
        with pytest.raises(ContractViolation):
            dp.same_part_out_parity(directed_cycle(3), BitVector.zeros(2), 0)


class TestDecisions:
    @pytest.mark.parametrize("kind", ["even-even", "even-odd"])
    def test_all_digraphs_on_three_vertices(self, kind):
        for mask in range(1 << 6):
            d = digraph_from_mask(3, mask)
            part = dp.partition(d, kind)
            ref = oracle.brute_partition_exists(d, kind)
            assert (part is None) == (ref is None)
            if part is not None:
                assert valid(d, part, kind)
                assert dp.witness(d, part).is_valid(dp.Kind(kind))

    def test_random_against_brute_force(self, rng):
        for _ in range(150):
            n = int(rng.integers(1, 11))
            d = random_digraph(rng, n, rng.choice([0.1, 0.3, 0.5]))
            for kind in ("even-even", "even-odd"):
                part = dp.partition(d, kind)
                assert (part is None) == (oracle.brute_partition_exists(d, kind) is None)


class TestEnumeration:
    def test_edgeless_all_subsets(self):
        parts = dp.enumerate_partitions(Digraph.empty(3), "even-even")
        assert len(parts) == 8 and len({p.side for p in parts}) == 8

    def test_triangle_empty(self):
        assert dp.enumerate_partitions(directed_cycle(3), "even-even") == []

    def test_matches_brute_force_set(self, rng):
        for _ in range(60):
            n = int(rng.integers(1, 11))
            d = random_digraph(rng, n, rng.choice([0.2, 0.5]))
            for kind in ("even-even", "even-odd"):
                got = {tuple(p.side.to_list()) for p in dp.enumerate_partitions(d, kind)}
                want = {tuple(s) for s in oracle.brute_all_partitions(d, kind)}
                assert got == want
                sols = dp.solution_set(d, kind)
                assert sols.count == len(want)
                limited = dp.enumerate_partitions(d, kind, limit=3)
                assert len(limited) == min(3, len(want))
                assert {tuple(p.side.to_list()) for p in limited} <= want


class TestNonempty:
    def test_two_cycle(self):
        part = dp.nonempty_partition(Digraph.from_arcs(2, [(0, 1), (1, 0)]), "even-even")
        assert part is not None and part.v0 and part.v1

    def test_single_vertex_impossible(self):
        assert dp.nonempty_partition(Digraph.empty(1), "even-even") is None

    def test_agrees_with_brute_force(self, rng):
        for _ in range(100):
            n = int(rng.integers(1, 9))
            d = random_digraph(rng, n, rng.choice([0.2, 0.5, 0.8]))
            for kind in ("even-even", "even-odd"):
                want = [s for s in oracle.brute_all_partitions(d, kind) if 0 < sum(s) < n]
                got = dp.nonempty_partition(d, kind)
                assert (got is None) == (not want)
                if got is not None:
                    assert tuple(got.side.to_list()) in {tuple(s) for s in want}


class TestRemarkFamily:
    def test_degenerate_member(self):
        k3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
        d = dp.remark_family_generate(k3, Digraph.empty(1), cross_arc_seed=0, density=0.0)
        assert d.n == 4 and d.m == 6
        for kind in dp.Kind:
            part = dp.partition(d, kind)
            assert part is not None and valid(d, part, kind.value)

    def test_c4_with_bidirected_triangle(self):
        c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        # a directed 2-cycle has out-degrees 1, so it is not a legal even part
        with pytest.raises(ContractViolation):
            dp.remark_family_generate(c4, Digraph.from_arcs(2, [(0, 1), (1, 0)]))
        triangle = Digraph.from_arcs(3, [(a, b) for a in range(3) for b in range(3) if a != b])
        for seed in range(20):
            d = dp.remark_family_generate(c4, triangle, cross_arc_seed=seed, density=0.7)
            for kind in dp.Kind:
                part = dp.partition(d, kind)
                assert part is not None and valid(d, part, kind.value)

    def test_constructed_parts_are_valid(self, rng):
        # the parts named by the construction itself: W0 + U | W1 and W0' + U | W1'
        from gf2parity import gallai

        for seed in range(50):
            sym = random_graph(rng, int(rng.integers(1, 12)), 0.5)
            even = dp.random_even_out_digraph(int(rng.integers(1, 6)), 0.5, seed=seed)
            d = dp.remark_family_generate(sym, even, cross_arc_seed=seed)
            u = range(sym.n, sym.n + even.n)
            ee = gallai.even_even_partition(sym)
            oe = gallai.odd_even_partition(sym)
            assert valid(d, Partition.from_parts(d.n, ee.v1), "even-even")
            assert valid(d, Partition.from_parts(d.n, oe.v1), "even-odd")
            assert set(u).isdisjoint(ee.v1 | oe.v1)

    def test_cross_arcs_only_from_u_to_w(self, rng):
        sym = random_graph(rng, 8, 0.5)
        even = dp.random_even_out_digraph(4, 0.5, seed=1)
        d = dp.remark_family_generate(sym, even, cross_arc_seed=2)
        for a, b in d.arcs():
            assert not (a < 8 <= b)

    def test_rejects_odd_out_degree(self):
        with pytest.raises(ContractViolation):
            dp.remark_family_generate(Graph.empty(2), Digraph.from_arcs(2, [(0, 1)]))

    def test_seed_reproducible(self, rng):
        sym = random_graph(rng, 8, 0.5)
        even = dp.random_even_out_digraph(4, 0.6, seed=3)
        a = dp.remark_family_generate(sym, even, cross_arc_seed=11)
        b = dp.remark_family_generate(sym, even, cross_arc_seed=11)
        assert a == b

    def test_random_even_out_digraph(self):
        for seed in range(20):
            d = dp.random_even_out_digraph(7, 0.5, seed=seed)
            assert all(d.out_degree(v) % 2 == 0 for v in range(7))


def test_witness_records_direct_counts(rng):
    d = random_digraph(rng, 12, 0.4)
    s = rng.integers(0, 2, 12)
    wit = dp.witness(d, Partition(BitVector.from_bits(s)))
    assert wit.per_vertex_check.to_list() == [count_same_part(d, s.tolist(), v) % 2 for v in range(12)]


def test_symmetric_digraphs_always_have_both(rng):
    from gf2parity.graph import symmetrize

    for _ in range(100):
        g = random_graph(rng, int(rng.integers(1, 30)), rng.random())
        d = symmetrize(g)
        assert dp.even_even_partition(d) is not None
        assert dp.even_odd_partition(d) is not None


def test_kernel_dim_reported(rng):
    sols = dp.solution_set(Digraph.empty(5), "even-even")
    assert sols.kernel_dim == 5 and sols.count == 32
    assert dp.solution_set(directed_cycle(3), "even-even").count == 0
    assert np.isclose(sols.count, 2 ** sols.kernel_dim)
