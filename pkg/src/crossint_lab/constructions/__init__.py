"""Explicit constructions: ACZ, canonical and matrix-defined pairs."""

from .canonical import acz_pair, canonical_pair, legal_canonical_params
from .matrix_families import (
    expand_matrix_pair,
    legal_ks,
    legal_matrix_sizes,
    matrix_family,
    matrix_pair_spec,
)

__all__ = [
    "acz_pair",
    "canonical_pair",
    "expand_matrix_pair",
    "legal_canonical_params",
    "legal_ks",
    "legal_matrix_sizes",
    "matrix_family",
    "matrix_pair_spec",
]
