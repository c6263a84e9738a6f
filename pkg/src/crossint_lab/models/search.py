"""Configuration and report models for the exact search."""

from typing import Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..exceptions import ParameterError, StructuralError
from .families import CrossPair
from .params import CanonicalParams


class SearchConfig(BaseModel):
    """Pruning and parallelism options for ``max_product``.

    :param prune_product: Use the sound cardinality bound
    :param prune_dimension: Use the span-dimension bound; ``None`` lets
        the engine decide from ``dimension_prune_min_n``
    :param enumerate_all_optima: Keep every optimal closed pair
    :param worker_count: Processes working on root branches
    """

    model_config = ConfigDict(frozen=True)

    prune_product: bool = True
    prune_dimension: Optional[bool] = None
    enumerate_all_optima: bool = False
    worker_count: int = 1

    @model_validator(mode="after")
    def check_workers(self) -> "SearchConfig":
        if self.worker_count < 1:
            raise ParameterError(
                "worker_count must be at least 1",
                "worker_count",
                self.worker_count,
            )
        return self


class SearchReport(BaseModel):
    """Outcome of one exact search.

    :param n: Ground-set size searched
    :param ell: Target intersection size
    :param value: Exact maximum product P_ℓ(n)
    :param witnesses: Optimal closed pairs, least ``.fam`` encoding first
    :param nodes_visited: Closed pairs expanded
    :param nodes_pruned: Subtrees cut by bounds or canonicity
    :param elapsed_ms: Wall-clock time of the search
    :param counters: Detailed counters by prune reason
    """

    model_config = ConfigDict(frozen=True)

    n: int
    ell: int
    value: int
    witnesses: Tuple[CrossPair, ...] = ()
    nodes_visited: int = 0
    nodes_pruned: int = 0
    elapsed_ms: float = 0.0
    counters: Dict[str, int] = Field(default_factory=dict)

    @model_validator(mode="after")
    def check_value(self) -> "SearchReport":
        if self.witnesses and self.value != max(
            w.product for w in self.witnesses
        ):
            raise StructuralError(
                "value must equal the best witness product", "value"
            )
        return self


class ClassificationResult(BaseModel):
    """Match of a pair against the canonical extremal families.

    When matched, ``relabeling[c - 1]`` is the element of the input
    pair that plays canonical element c, and the input's A side is the
    canonical B side iff ``swapped``.
    """

    model_config = ConfigDict(frozen=True)

    matched: bool
    params: Optional[CanonicalParams] = None
    swapped: bool = False
    relabeling: Tuple[int, ...] = ()

    @property
    def extension_beyond_theorem(self) -> bool:
        """True for the ℓ = 0 matches, which lie outside the theorem."""
        return self.params is not None and self.params.is_extension


class OptimaReport(BaseModel):
    """Every optimum of one search, up to relabeling and swap.

    ``classes`` holds one representative per isomorphism class and
    ``results`` its classification, index for index.
    """

    model_config = ConfigDict(frozen=True)

    n: int
    ell: int
    value: int
    classes: Tuple[CrossPair, ...] = ()
    results: Tuple[ClassificationResult, ...] = ()

    @property
    def unmatched(self) -> Tuple[CrossPair, ...]:
        return tuple(
            p for p, r in zip(self.classes, self.results) if not r.matched
        )

    @property
    def all_matched(self) -> bool:
        return all(r.matched for r in self.results)
