"""Exact search for P_ℓ(n), closed pairs and extremal classification."""

from .classify import (
    apply_relabeling,
    classify_extremal,
    find_relabeling,
    is_isomorphic_pair,
)
from .engine import (
    enumerate_closed_pairs,
    max_product,
    naive_max_product,
    value_profile,
)
from .galois import alpha_operator, beta_operator, closure, relation_masks
from .optima import enumerate_optima

__all__ = [
    "alpha_operator",
    "apply_relabeling",
    "beta_operator",
    "classify_extremal",
    "closure",
    "enumerate_closed_pairs",
    "enumerate_optima",
    "find_relabeling",
    "is_isomorphic_pair",
    "max_product",
    "naive_max_product",
    "relation_masks",
    "value_profile",
]
