"""Counting bounds: Sperner, LYM, Littlewood–Offord and product bounds."""

from .antichains import (
    bipartite_bound,
    bipartite_hypothesis,
    incomparable_split_hypothesis,
    lym_sum,
    sperner_bound,
)
from .littlewood_offord import (
    lo_bound,
    lo_count,
    middle_binomial_sum,
    middle_indices,
    sumset,
    tightness_instance,
)
from .products import (
    conjectured_max,
    construction_lower_bound,
    frankl_rodl_bound,
    known_upper_bound,
    span_constant_bound,
    theorem_backed_value,
    weak_constant_bound,
)

__all__ = [
    "bipartite_bound",
    "bipartite_hypothesis",
    "conjectured_max",
    "construction_lower_bound",
    "frankl_rodl_bound",
    "incomparable_split_hypothesis",
    "known_upper_bound",
    "lo_bound",
    "lo_count",
    "lym_sum",
    "middle_binomial_sum",
    "middle_indices",
    "span_constant_bound",
    "sperner_bound",
    "sumset",
    "theorem_backed_value",
    "tightness_instance",
]
