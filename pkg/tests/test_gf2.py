from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gf2parity import oracle
from gf2parity.errors import ContractViolation
from gf2parity.gf2 import (
    BitMatrix,
    BitVector,
    inconsistency_certificate,
    kernel_basis,
    mat_vec,
    rank,
    solution_space,
    solve,
    span,
)


def bv(*bits):
    return BitVector.from_bits(bits)


@st.composite
def square_matrices(draw, max_n=12):
    n = draw(st.integers(min_value=1, max_value=max_n))
    bits = draw(st.lists(st.integers(0, 1), min_size=n * n, max_size=n * n))
    return np.array(bits, dtype=np.uint8).reshape(n, n)


class TestBitVector:
    def test_padding_bits_stay_zero(self):
        v = BitVector.ones(70)
        assert v.words[1] == (1 << 6) - 1
        assert (~v).popcount() == 0

    def test_round_trips(self):
        s = "1011000000000000000000000000000000000000000000000000000000000000011"
        v = BitVector.from_string(s)
        assert v.to_string() == s
        assert BitVector.from_indices(len(s), v.indices()) == v
        assert [v[i] for i in range(len(s))] == [int(c) for c in s]

    def test_xor_and_parity(self):
        a, b = bv(1, 1, 0, 1), bv(0, 1, 1, 1)
        assert a ^ b == bv(1, 0, 1, 0)
        assert (a & b) == bv(0, 1, 0, 1)
        assert a.parity() == 1
        assert a.dot(b) == 0

    def test_length_mismatch(self):
        with pytest.raises(ContractViolation):
            bv(1, 0) ^ bv(1, 0, 1)

    def test_with_bit(self):
        v = BitVector.zeros(130).with_bit(129, 1)
        assert v.indices() == [129]
        assert v.with_bit(129, 0) == BitVector.zeros(130)


class TestMatVec:
    def test_identity(self):
        x = bv(1, 0, 1, 1, 0)
        assert mat_vec(BitMatrix.identity(5), x) == x

    def test_all_ones_even_weight(self):
        ones = BitMatrix.from_dense(np.ones((3, 3), dtype=np.uint8))
        assert mat_vec(ones, bv(1, 1, 0)) == bv(0, 0, 0)

    def test_against_naive(self, rng):
        for _ in range(50):
            a = rng.integers(0, 2, (12, 12))
            x = rng.integers(0, 2, 12)
            got = mat_vec(BitMatrix.from_dense(a), BitVector.from_bits(x)).to_list()
            assert got == oracle.naive_mat_vec(a.tolist(), x.tolist())

    def test_dimension_mismatch(self):
        with pytest.raises(ContractViolation):
            mat_vec(BitMatrix.identity(3), bv(1, 0))


class TestSolve:
    def test_identity(self):
        assert solve(BitMatrix.identity(3), bv(1, 0, 1)) == bv(1, 0, 1)

    def test_directed_triangle_plus_identity_is_inconsistent(self):
        # columns of A each sum to 0 while b sums to 1
        a = BitMatrix.from_dense([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
        assert solve(a, bv(1, 1, 1)) is None
        cert = inconsistency_certificate(a, bv(1, 1, 1))
        assert cert == bv(1, 1, 1)

    def test_matches_exhaustive_search_8x8(self, rng):
        for _ in range(40):
            a = rng.integers(0, 2, (8, 8))
            b = rng.integers(0, 2, 8)
            solutions = [
                x for x in product((0, 1), repeat=8)
                if oracle.naive_mat_vec(a.tolist(), x) == b.tolist()
            ]
            got = solve(BitMatrix.from_dense(a), BitVector.from_bits(b))
            if solutions:
                assert got is not None and tuple(got.to_list()) in solutions
            else:
                assert got is None

    def test_free_variables_are_zero(self):
        # x0 + x1 = 1 with x2 free; particular solution keeps free columns at 0
        a = BitMatrix.from_dense([[1, 1, 0], [0, 0, 0], [0, 0, 0]])
        x = solve(a, bv(1, 0, 0))
        assert x == bv(1, 0, 0)

    def test_rejects_bad_shapes(self):
        with pytest.raises(ContractViolation):
            solve(BitMatrix.zeros(2, 3), bv(0, 0))
        with pytest.raises(ContractViolation):
            solve(BitMatrix.identity(3), bv(0, 0))

    def test_empty_system(self):
        assert solve(BitMatrix.zeros(0), BitVector.zeros(0)) == BitVector.zeros(0)

    @pytest.mark.parametrize("n", [63, 64, 65, 130])
    def test_word_boundaries(self, rng, n):
        a = BitMatrix.from_dense(rng.integers(0, 2, (n, n)))
        b = mat_vec(a, BitVector.from_bits(rng.integers(0, 2, n)))
        x = solve(a, b)
        assert x is not None and mat_vec(a, x) == b

    def test_solvable_iff_rank_preserved_all_small(self):
        # every matrix up to 3x3 with every right-hand side
        for n in (1, 2, 3):
            for mask in range(1 << (n * n)):
                a = [[mask >> (i * n + j) & 1 for j in range(n)] for i in range(n)]
                ra = oracle.naive_rank(a)
                for b in product((0, 1), repeat=n):
                    aug = [row + [b[i]] for i, row in enumerate(a)]
                    got = solve(BitMatrix.from_dense(a), BitVector.from_bits(b))
                    assert (got is None) == (ra < oracle.naive_rank(aug))


class TestRankAndKernel:
    def test_trivial(self):
        assert rank(BitMatrix.identity(4)) == 4
        assert rank(BitMatrix.zeros(5)) == 0
        assert kernel_basis(BitMatrix.identity(3)) == []
        assert len(kernel_basis(BitMatrix.zeros(3))) == 3

    def test_rank_against_naive(self, rng):
        for _ in range(50):
            a = rng.integers(0, 2, (10, 10))
            a[rng.integers(10)] = a[rng.integers(10)]  # encourage deficiency
            assert rank(BitMatrix.from_dense(a)) == oracle.naive_rank(a.tolist())

    def test_kernel_span_equals_exhaustive_nullspace(self, rng):
        for _ in range(20):
            a = rng.integers(0, 2, (8, 8))
            a[:, 3] = a[:, 1] ^ a[:, 2]
            basis = kernel_basis(BitMatrix.from_dense(a))
            spanned = {tuple(v.to_list()) for v in span(basis, 8)}
            assert spanned == {tuple(x) for x in oracle.naive_kernel(a.tolist())}
            assert len(spanned) == 1 << len(basis)

    def test_rectangular_rank(self, rng):
        a = rng.integers(0, 2, (5, 9))
        assert rank(BitMatrix.from_dense(a)) == oracle.naive_rank(a.tolist())

    def test_span_limit(self):
        basis = kernel_basis(BitMatrix.zeros(4))
        assert len(span(basis, 4, limit=5)) == 5
        assert len(set(span(basis, 4))) == 16


@settings(max_examples=150, deadline=None)
@given(square_matrices(), st.data())
def test_round_trip_property(a, data):
    n = a.shape[0]
    x = data.draw(st.lists(st.integers(0, 1), min_size=n, max_size=n))
    m = BitMatrix.from_dense(a)
    b = mat_vec(m, BitVector.from_bits(x))
    y = solve(m, b)
    assert y is not None and mat_vec(m, y) == b


@settings(max_examples=150, deadline=None)
@given(square_matrices())
def test_rank_nullity(a):
    m = BitMatrix.from_dense(a)
    basis = kernel_basis(m)
    assert len(basis) + rank(m) == a.shape[0]
    for v in basis:
        assert not mat_vec(m, v).any()


def test_packed_and_naive_agree_random(rng):
    for _ in range(1000):
        n = int(rng.integers(1, 65))
        a = rng.integers(0, 2, (n, n))
        if rng.random() < 0.5:
            a[: n // 2] = a[n // 2 : 2 * (n // 2)]
        b = rng.integers(0, 2, n)
        m, vb = BitMatrix.from_dense(a), BitVector.from_bits(b)
        al, bl = a.tolist(), b.tolist()
        assert rank(m) == oracle.naive_rank(al)
        x = solve(m, vb)
        ref = oracle.naive_solve(al, bl)
        assert (x is None) == (ref is None)
        if x is not None:
            assert x.to_list() == ref  # both use free variables = 0
        assert mat_vec(m, vb).to_list() == oracle.naive_mat_vec(al, bl)


def test_solution_space_describes_all_solutions(rng):
    a = rng.integers(0, 2, (6, 6))
    a[5] = a[0] ^ a[1]
    m = BitMatrix.from_dense(a)
    b = mat_vec(m, BitVector.from_bits(rng.integers(0, 2, 6)))
    x0, basis = solution_space(m, b)
    got = {tuple((x0 ^ k).to_list()) for k in span(basis, 6)}
    want = {x for x in product((0, 1), repeat=6) if oracle.naive_mat_vec(a.tolist(), x) == b.to_list()}
    assert got == want


def test_random_12x12_consistency_matches_rank(rng):
    for _ in range(1000):
        a = rng.integers(0, 2, (12, 12))
        if rng.random() < 0.7:
            a[rng.integers(12)] = 0
        b = rng.integers(0, 2, 12)
        aug = np.hstack([a, b[:, None]])
        got = solve(BitMatrix.from_dense(a), BitVector.from_bits(b))
        assert (got is None) == (oracle.naive_rank(a.tolist()) < oracle.naive_rank(aug.tolist()))


def test_solvable_iff_rank_preserved_all_4x4(rng):
    # all 2^16 matrices, one random right-hand side each
    rhs = rng.integers(0, 2, (1 << 16, 4))
    for mask in range(1 << 16):
        a = [[mask >> (4 * i + j) & 1 for j in range(4)] for i in range(4)]
        b = rhs[mask].tolist()
        aug = [row + [b[i]] for i, row in enumerate(a)]
        got = solve(BitMatrix.from_dense(a), BitVector.from_bits(b))
        assert (got is None) == (oracle.naive_rank(a) < oracle.naive_rank(aug))
