"""Extremal constituents of the representation attached to a marked
symplectic partition, and the pair-of-partitions combinatorics behind them."""

from .extremal import bar, lambda_max, lambda_min, mult_pair, mult_table, verify_extremal
from .kostka import mult_bruteforce, mult_recursive
from .pab import IndexedPair, Params, p_bracket, p_constrained_set, p_set
from .partitions import MarkedSymplectic, enumerate_marked
from .springer import k_of, pair_to_springer, sign_twist, springer_to_pair

__all__ = [
    "IndexedPair",
    "MarkedSymplectic",
    "Params",
    "bar",
    "enumerate_marked",
    "k_of",
    "lambda_max",
    "lambda_min",
    "mult_bruteforce",
    "mult_pair",
    "mult_recursive",
    "mult_table",
    "p_bracket",
    "p_constrained_set",
    "p_set",
    "pair_to_springer",
    "sign_twist",
    "springer_to_pair",
    "verify_extremal",
]
