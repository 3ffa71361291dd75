"""Dense linear algebra over GF(2) on word-packed bit rows.

Bits are stored little-endian inside ``uint64`` words: bit ``i`` of a vector
lives in word ``i // 64`` at position ``i % 64``.  Padding bits past the
logical length are always zero, which lets XOR/AND/popcount run on whole
words without masking.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from gf2parity.errors import ContractViolation

WORD = 64


def _n_words(n: int) -> int:
    return (n + WORD - 1) // WORD


def _pack(bits: np.ndarray) -> np.ndarray:
    """Pack a (..., n) array of 0/1 values into (..., ceil(n/64)) uint64 words."""
    bits = np.asarray(bits, dtype=bool)
    n = bits.shape[-1]
    packed = np.packbits(bits, axis=-1, bitorder="little")
    out = np.zeros(bits.shape[:-1] + (_n_words(n) * 8,), dtype=np.uint8)
    out[..., : packed.shape[-1]] = packed
    return out.view("<u8").astype(np.uint64, copy=False)


def _unpack(words: np.ndarray, n: int) -> np.ndarray:
    raw = np.ascontiguousarray(words, dtype="<u8").view(np.uint8)
    return np.unpackbits(raw, axis=-1, count=n, bitorder="little")


class BitVector:
    """Fixed-length vector over GF(2).

    Treat instances as immutable: every operation returns a new vector.
    """

    __slots__ = ("_n", "words")

    def __init__(self, n: int, words: np.ndarray | None = None):
        if n < 0:
            raise ContractViolation(f"negative length {n}")
        self._n = n
        if words is None:
            words = np.zeros(_n_words(n), dtype=np.uint64)
        elif words.shape != (_n_words(n),):
            raise ContractViolation(
                f"expected {_n_words(n)} words for length {n}, got shape {words.shape}"
            )
        self.words = words

    @classmethod
    def zeros(cls, n: int) -> BitVector:
        return cls(n)

    @classmethod
    def ones(cls, n: int) -> BitVector:
        return cls.from_bits(np.ones(n, dtype=np.uint8))

    @classmethod
    def from_bits(cls, bits: Iterable[int] | np.ndarray) -> BitVector:
        arr = np.asarray(list(bits) if not isinstance(bits, np.ndarray) else bits)
        if arr.ndim != 1:
            raise ContractViolation("bit sequence must be one-dimensional")
        arr = arr.astype(np.uint8) & 1
        return cls(len(arr), _pack(arr))

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> BitVector:
        arr = np.zeros(n, dtype=np.uint8)
        for i in indices:
            if not 0 <= i < n:
                raise ContractViolation(f"index {i} out of range for length {n}")
            arr[i] = 1
        return cls(n, _pack(arr))

    @classmethod
    def from_string(cls, text: str) -> BitVector:
        """Parse a string such as ``"0110"``; character ``i`` is bit ``i``."""
        if any(ch not in "01" for ch in text):
            raise ContractViolation(f"bit string may only contain 0/1: {text!r}")
        return cls.from_bits([int(ch) for ch in text])

    def __len__(self) -> int:
        return self._n

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self._n:
            raise IndexError(i)
        return int(self.words[i // WORD] >> np.uint64(i % WORD)) & 1

    def __iter__(self):
        return iter(self.to_list())

    def _check_len(self, other: BitVector) -> None:
        if self._n != other._n:
            raise ContractViolation(f"length mismatch: {self._n} vs {other._n}")

    def __xor__(self, other: BitVector) -> BitVector:
        self._check_len(other)
        return BitVector(self._n, self.words ^ other.words)

    def __and__(self, other: BitVector) -> BitVector:
        self._check_len(other)
        return BitVector(self._n, self.words & other.words)

    def __or__(self, other: BitVector) -> BitVector:
        self._check_len(other)
        return BitVector(self._n, self.words | other.words)

    def __invert__(self) -> BitVector:
        return BitVector.ones(self._n) ^ self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitVector):
            return NotImplemented
        return self._n == other._n and bool(np.array_equal(self.words, other.words))

    def __hash__(self) -> int:
        return hash((self._n, self.words.tobytes()))

    def __repr__(self) -> str:
        return f"BitVector({self.to_string()!r})"

    def popcount(self) -> int:
        return int(np.bitwise_count(self.words).sum())

    def parity(self) -> int:
        return self.popcount() & 1

    def dot(self, other: BitVector) -> int:
        """Inner product over GF(2)."""
        return (self & other).parity()

    def any(self) -> bool:
        return bool(self.words.any())

    def with_bit(self, i: int, value: int) -> BitVector:
        if not 0 <= i < self._n:
            raise IndexError(i)
        words = self.words.copy()
        mask = np.uint64(1) << np.uint64(i % WORD)
        if value & 1:
            words[i // WORD] |= mask
        else:
            words[i // WORD] &= ~mask
        return BitVector(self._n, words)

    def to_numpy(self) -> np.ndarray:
        return _unpack(self.words, self._n)

    def to_list(self) -> list[int]:
        return self.to_numpy().tolist()

    def to_string(self) -> str:
        return "".join("1" if b else "0" for b in self.to_numpy())

    def indices(self) -> list[int]:
        return np.flatnonzero(self.to_numpy()).tolist()


class BitMatrix:
    """Dense ``rows x cols`` matrix over GF(2), one packed word-row per matrix row."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: np.ndarray | None = None):
        self.rows = rows
        self.cols = cols
        if data is None:
            data = np.zeros((rows, _n_words(cols)), dtype=np.uint64)
        elif data.shape != (rows, _n_words(cols)):
            raise ContractViolation(
                f"expected data shape {(rows, _n_words(cols))}, got {data.shape}"
            )
        self.data = data

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> BitMatrix:
        return cls(rows, rows if cols is None else cols)

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls.from_dense(np.eye(n, dtype=np.uint8))

    @classmethod
    def from_dense(cls, dense: np.ndarray | Sequence[Sequence[int]]) -> BitMatrix:
        arr = np.asarray(dense)
        if arr.ndim != 2:
            if arr.size == 0:
                arr = arr.reshape(0, 0)
            else:
                raise ContractViolation("dense matrix must be two-dimensional")
        arr = arr.astype(np.uint8) & 1
        rows, cols = arr.shape
        return cls(rows, cols, _pack(arr).reshape(rows, _n_words(cols)))

    @classmethod
    def from_rows(cls, rows: Sequence[BitVector]) -> BitMatrix:
        if not rows:
            return cls(0, 0)
        cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ContractViolation("rows have different lengths")
        return cls(len(rows), cols, np.stack([r.words for r in rows]))

    def to_dense(self) -> np.ndarray:
        return _unpack(self.data, self.cols).reshape(self.rows, self.cols)

    def copy(self) -> BitMatrix:
        return BitMatrix(self.rows, self.cols, self.data.copy())

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.data[i].copy())

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return int(self.data[i, j // WORD] >> np.uint64(j % WORD)) & 1

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.data, other.data))

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data.tobytes()))

    def __add__(self, other: BitMatrix) -> BitMatrix:
        if self.shape != other.shape:
            raise ContractViolation(f"shape mismatch: {self.shape} vs {other.shape}")
        return BitMatrix(self.rows, self.cols, self.data ^ other.data)

    def __repr__(self) -> str:
        return f"BitMatrix({self.rows}x{self.cols})"

    def is_symmetric(self) -> bool:
        if not self.is_square():
            return False
        dense = self.to_dense()
        return bool(np.array_equal(dense, dense.T))

    def transpose(self) -> BitMatrix:
        return BitMatrix.from_dense(self.to_dense().T)

    def diagonal(self) -> BitVector:
        if not self.is_square():
            raise ContractViolation("diagonal of a non-square matrix")
        return BitVector.from_bits(np.diagonal(self.to_dense()))

    def add_diagonal(self, d: BitVector) -> BitMatrix:
        """Return ``self + diag(d)``."""
        if not self.is_square() or len(d) != self.rows:
            raise ContractViolation("add_diagonal needs a square matrix and matching vector")
        out = self.data.copy()
        idx = np.array(d.indices(), dtype=np.int64)
        if idx.size:
            out[idx, idx // WORD] ^= np.uint64(1) << (idx % WORD).astype(np.uint64)
        return BitMatrix(self.rows, self.cols, out)

    def row_popcounts(self) -> np.ndarray:
        return np.bitwise_count(self.data).sum(axis=1, dtype=np.int64)


def mat_vec(a: BitMatrix, x: BitVector) -> BitVector:
    """Compute ``a @ x`` over GF(2): bit ``v`` is the parity of ``row_v & x``."""
    if a.cols != len(x):
        raise ContractViolation(f"mat_vec: matrix has {a.cols} columns, vector length {len(x)}")
    parities = np.bitwise_count(a.data & x.words).sum(axis=1, dtype=np.int64) & 1
    return BitVector.from_bits(parities.astype(np.uint8))


@dataclass
class Echelon:
    """Reduced row echelon form: ``data`` holds the reduced rows, ``pivots[i]``
    is the pivot column of row ``i`` (rows past ``len(pivots)`` are zero)."""

    data: np.ndarray
    cols: int
    pivots: list[int]

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def bit(self, i: int, j: int) -> int:
        return int(self.data[i, j // WORD] >> np.uint64(j % WORD)) & 1


def _reduce(data: np.ndarray, cols: int, pivot_limit: int | None = None) -> list[int]:
    """Gauss-Jordan elimination in place; returns the pivot columns.

    Only the first ``pivot_limit`` columns are eligible as pivots, which keeps an
    augmented right-hand side column out of the pivot search.
    """
    nrows = data.shape[0]
    limit = cols if pivot_limit is None else pivot_limit
    pivots: list[int] = []
    r = 0
    for c in range(limit):
        if r == nrows:
            break
        w = c // WORD
        colbits = (data[:, w] >> np.uint64(c % WORD)) & np.uint64(1)
        below = np.flatnonzero(colbits[r:])
        if below.size == 0:
            continue
        p = r + int(below[0])
        if p != r:
            data[[r, p]] = data[[p, r]]
            colbits[r], colbits[p] = colbits[p], colbits[r]
        hits = np.flatnonzero(colbits)
        hits = hits[hits != r]
        if hits.size:
            # columns left of c are already zero in the pivot row
            data[hits, w:] ^= data[r, w:]
        pivots.append(c)
        r += 1
    return pivots


def rref(a: BitMatrix) -> Echelon:
    data = a.data.copy()
    return Echelon(data, a.cols, _reduce(data, a.cols))


def rank(a: BitMatrix) -> int:
    return rref(a).rank


def _augment(a: BitMatrix, b: BitVector) -> np.ndarray:
    cols = a.cols + 1
    data = np.zeros((a.rows, _n_words(cols)), dtype=np.uint64)
    data[:, : a.data.shape[1]] = a.data
    wb = a.cols // WORD
    data[:, wb] |= b.to_numpy().astype(np.uint64) << np.uint64(a.cols % WORD)
    return data


def _kernel_from_echelon(ech: Echelon, n: int) -> list[BitVector]:
    pivot_set = set(ech.pivots)
    basis = []
    for f in range(n):
        if f in pivot_set:
            continue
        bits = np.zeros(n, dtype=np.uint8)
        bits[f] = 1
        for i, c in enumerate(ech.pivots):
            bits[c] = ech.bit(i, f)
        basis.append(BitVector.from_bits(bits))
    return basis


def _check_system(a: BitMatrix, b: BitVector) -> None:
    if not a.is_square():
        raise ContractViolation(f"solve needs a square matrix, got {a.shape}")
    if len(b) != a.rows:
        raise ContractViolation(f"right-hand side length {len(b)} != {a.rows}")


def _eliminate(a: BitMatrix, b: BitVector) -> tuple[Echelon, BitVector | None]:
    _check_system(a, b)
    n = a.cols
    data = _augment(a, b)
    pivots = _reduce(data, n + 1, pivot_limit=n)
    ech = Echelon(data, n + 1, pivots)
    # a zero row with a 1 in the augmented column means inconsistency
    rank_a = len(pivots)
    if rank_a < a.rows:
        tail = (data[rank_a:, n // WORD] >> np.uint64(n % WORD)) & np.uint64(1)
        if tail.any():
            return ech, None
    x = np.zeros(n, dtype=np.uint8)
    for i, c in enumerate(pivots):
        x[c] = ech.bit(i, n)
    return ech, BitVector.from_bits(x)


def solution_space(a: BitMatrix, b: BitVector) -> tuple[BitVector | None, list[BitVector]]:
    """Solve ``a x = b`` and describe every solution.

    Returns ``(x0, basis)`` where ``x0`` is the particular solution with all free
    variables set to 0 (or ``None`` when the system is inconsistent) and
    ``basis`` spans the kernel of ``a``.  Every solution is ``x0`` plus a
    combination of basis vectors.
    """
    ech, x = _eliminate(a, b)
    return x, _kernel_from_echelon(ech, a.cols)


def inconsistency_certificate(a: BitMatrix, b: BitVector) -> BitVector | None:
    """A vector ``y`` with ``y^T a = 0`` and ``y . b = 1``, proving ``a x = b`` unsolvable.

    Returns ``None`` when the system is consistent (no such ``y`` exists).
    """
    _check_system(a, b)
    for y in kernel_basis(a.transpose()):
        if y.dot(b):
            return y
    return None


def solve(a: BitMatrix, b: BitVector) -> BitVector | None:
    """Return some ``x`` with ``a x = b`` over GF(2), or ``None`` if none exists.

    Free variables are fixed to 0, so the answer is deterministic.
    """
    return _eliminate(a, b)[1]


def kernel_basis(a: BitMatrix) -> list[BitVector]:
    if not a.is_square():
        raise ContractViolation(f"kernel_basis needs a square matrix, got {a.shape}")
    return _kernel_from_echelon(rref(a), a.cols)


def span(basis: Sequence[BitVector], n: int, limit: int | None = None) -> list[BitVector]:
    """Enumerate the span of ``basis`` in Gray-code order, at most ``limit`` vectors."""
    total = 1 << len(basis)
    if limit is not None:
        total = min(total, limit)
    out = []
    cur = BitVector.zeros(n)
    for k in range(total):
        if k:
            # bit that flips between gray(k-1) and gray(k)
            cur = cur ^ basis[(k & -k).bit_length() - 1]
        out.append(cur)
    return out
