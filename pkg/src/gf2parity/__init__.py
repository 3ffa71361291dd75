"""Degree-parity partitions and parity-constrained induced subgraphs over GF(2)."""

from gf2parity.errors import ContractViolation, InvariantViolation, ParseError
from gf2parity.gf2 import BitMatrix, BitVector, kernel_basis, mat_vec, rank, solve
from gf2parity.graph import Digraph, Graph, Partition

__all__ = [
    "BitMatrix",
    "BitVector",
    "ContractViolation",
    "Digraph",
    "Graph",
    "InvariantViolation",
    "ParseError",
    "Partition",
    "kernel_basis",
    "mat_vec",
    "rank",
    "solve",
]
