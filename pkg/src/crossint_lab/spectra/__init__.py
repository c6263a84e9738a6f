"""Exact rational linear algebra over characteristic vectors."""

from .analysis import (
    aligned_echelon_pair,
    char_matrix,
    characteristic_vector,
    difference_matrix,
    duality_check,
    orthogonal,
    span_dims,
)
from .echelon import coefficient_bound, integer_rank, rref
from .rows import STRATEGIES, classify_rows, replay_selection

__all__ = [
    "STRATEGIES",
    "aligned_echelon_pair",
    "char_matrix",
    "characteristic_vector",
    "classify_rows",
    "coefficient_bound",
    "difference_matrix",
    "duality_check",
    "integer_rank",
    "orthogonal",
    "replay_selection",
    "rref",
    "span_dims",
]
