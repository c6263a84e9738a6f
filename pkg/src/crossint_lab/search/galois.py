"""The Galois connection of the relation |A∩B| = ℓ on 2^[n].

Families are handled as bitmasks over the universe of all 2^n subsets:
bit t of a universe mask stands for the subset whose own mask is t. The
relation is symmetric, so one operator serves both directions: β(F) is the
set of subsets meeting every member of F in exactly ℓ elements, and a
closed pair is (β(β(F)), β(F)).
"""

from functools import lru_cache
from typing import Iterator, List, Tuple

from ..models.families import CrossPair, Family

UniverseMask = int


def iter_bits(x: UniverseMask) -> Iterator[int]:
    """Indices of the set bits of ``x`` in ascending order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@lru_cache(maxsize=64)
def relation_masks(n: int, ell: int) -> Tuple[UniverseMask, ...]:
    """Row t is the universe mask of all s with |s∩t| = ℓ."""
    size = 1 << n
    rows: List[UniverseMask] = []
    for t in range(size):
        row = 0
        for s in range(size):
            if (s & t).bit_count() == ell:
                row |= 1 << s
        rows.append(row)
    return tuple(rows)


def full_universe(n: int) -> UniverseMask:
    return (1 << (1 << n)) - 1


def polar(
    members: UniverseMask, neighbors: Tuple[UniverseMask, ...], n: int
) -> UniverseMask:
    """AND of the neighbor rows of ``members``; the empty set maps to all."""
    out = full_universe(n)
    for t in iter_bits(members):
        out &= neighbors[t]
        if not out:
            break
    return out


def family_from_universe(n: int, members: UniverseMask) -> Family:
    return Family.of(n, iter_bits(members))


def beta_operator(f: Family, ell: int) -> Family:
    """All B ⊆ [n] with |A∩B| = ℓ for every A ∈ f.

    The empty family maps to all 2^n subsets.
    """
    neighbors = relation_masks(f.n, ell)
    return family_from_universe(
        f.n, polar(f.universe_mask, neighbors, f.n)
    )


alpha_operator = beta_operator
"""The A-side operator; the relation is symmetric, so α = β."""


def closure(f: Family, ell: int) -> CrossPair:
    """The closed pair (α(β(f)), β(f)) generated by ``f``.

    The result contains ``f`` on the A side, is idempotent, and is
    cross-intersecting by construction.
    """
    neighbors = relation_masks(f.n, ell)
    b = polar(f.universe_mask, neighbors, f.n)
    a = polar(b, neighbors, f.n)
    return CrossPair.build(
        family_from_universe(f.n, a),
        family_from_universe(f.n, b),
        ell,
        verified=True,
    )
