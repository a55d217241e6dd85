"""Labelled m-Tamari intervals: enumeration, the symmetric group action and
exact series for the refined Frobenius characteristic."""

from .combinatorics import BallotPath, Partition, Permutation, enumerate_ballot_paths, partitions_of
from .lattice import TamariLattice, build_lattice
from .action import character, character_table, brute_frobenius
from .formulas import chi_formula, dim_formula

__version__ = "0.1.0"

__all__ = [
    "BallotPath", "Partition", "Permutation", "enumerate_ballot_paths", "partitions_of",
    "TamariLattice", "build_lattice", "character", "character_table", "brute_frobenius",
    "chi_formula", "dim_formula",
]
