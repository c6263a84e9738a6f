"""Reduction of a cross-intersecting pair to its normalized core.

An element that lies in no member of B can be toggled freely in A without
changing any intersection size. When A is closed under that toggle it
contributes an exact factor 2 to |A| and can be deleted; symmetrically for
elements that lie in no member of A. What remains is a pair of antichains
that both cover the reduced ground set.
"""

import logging
from typing import List, Tuple

from ..exceptions import PreconditionError
from ..models.families import CrossPair, Family, ReductionTrace, SubsetMask
from .predicates import (
    is_cross_intersecting,
    saturated_elements,
    support_union,
)

logger = logging.getLogger(__name__)


def _compress(mask: SubsetMask, kept: List[int]) -> SubsetMask:
    """Project ``mask`` onto the kept elements, relabeled 1..len(kept)."""
    out = 0
    for new_index, element in enumerate(kept):
        if mask >> (element - 1) & 1:
            out |= 1 << new_index
    return out


def normalize_pair(p: CrossPair) -> Tuple[CrossPair, ReductionTrace]:
    """Peel the free 2^X and 2^Y factors off a cross-intersecting pair.

    Elements are peeled in ascending order. An element absent from every
    member of B is charged to the A side (the 2^X factor); one absent from
    every member of A is charged to the B side (the 2^Y factor). Each
    peeled element must be saturated on its side, which holds for every
    closed pair.

    :param p: A cross-intersecting pair with both families nonempty
    :return: The reduced pair and the trace of peeled elements
    :raises PreconditionError: If a family is empty, the pair is not
        cross-intersecting, or a peeled element is not saturated
    """
    if not p.a.members or not p.b.members:
        raise PreconditionError(
            "normalize_pair needs two nonempty families", "normalize_pair"
        )
    if not (p.verified or is_cross_intersecting(p)):
        raise PreconditionError(
            "normalize_pair needs a cross-intersecting pair",
            "normalize_pair",
        )

    union_a = support_union(p.a)
    union_b = support_union(p.b)
    sat_a = saturated_elements(p.a)
    sat_b = saturated_elements(p.b)

    from_a: List[int] = []
    from_b: List[int] = []
    kept: List[int] = []
    for element in range(1, p.n + 1):
        bit = 1 << (element - 1)
        if not union_b & bit:
            if not sat_a & bit:
                raise PreconditionError(
                    f"Element {element} lies in no B but A is not closed "
                    "under toggling it",
                    "normalize_pair",
                )
            from_a.append(element)
        elif not union_a & bit:
            if not sat_b & bit:
                raise PreconditionError(
                    f"Element {element} lies in no A but B is not closed "
                    "under toggling it",
                    "normalize_pair",
                )
            from_b.append(element)
        else:
            kept.append(element)

    trace = ReductionTrace(
        removed_from_a_side=tuple(from_a),
        removed_from_b_side=tuple(from_b),
        kept_elements=tuple(kept),
        original_n=p.n,
        reduced_n=len(kept),
    )
    if trace.is_empty:
        return p, trace

    reduced_n = len(kept)
    a = Family.of(reduced_n, (_compress(m, kept) for m in p.a.members))
    b = Family.of(reduced_n, (_compress(m, kept) for m in p.b.members))
    # Peeled elements meet no member of the other side.
    reduced = CrossPair(a=a, b=b, ell=p.ell, n=reduced_n).mark_verified()
    logger.debug(
        "Normalized pair on [%d] to [%d]: X=%s Y=%s",
        p.n,
        reduced_n,
        from_a,
        from_b,
    )
    return reduced, trace
