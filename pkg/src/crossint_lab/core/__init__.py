"""Subsets, families, the cross-intersection predicate and normalization."""

from .normalize import normalize_pair
from .predicates import (
    intersect_size,
    is_antichain,
    is_cross_intersecting,
    relabel_family,
    relabel_mask,
    relabel_pair,
    saturated_elements,
    support_union,
)

__all__ = [
    "intersect_size",
    "is_antichain",
    "is_cross_intersecting",
    "normalize_pair",
    "relabel_family",
    "relabel_mask",
    "relabel_pair",
    "saturated_elements",
    "support_union",
]
