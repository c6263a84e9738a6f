"""Basic predicates and transformations on families and cross pairs."""

import logging
from typing import Sequence

from ..exceptions import StructuralError
from ..models.families import CrossPair, Family, SubsetMask

logger = logging.getLogger(__name__)


def intersect_size(a: SubsetMask, b: SubsetMask) -> int:
    """Return |A∩B| for two masks over the same ground set."""
    return (a & b).bit_count()


def is_cross_intersecting(p: CrossPair) -> bool:
    """Check that every (A, B) ∈ a×b meets in exactly ``p.ell`` elements.

    A positive answer is cached on the pair as ``p.verified``.

    :param p: Pair to check
    :return: True iff the pair is ℓ-cross-intersecting
    :raises StructuralError: If the families live on different ground sets
    """
    if p.a.n != p.n or p.b.n != p.n:
        raise StructuralError("Families do not share the ground set", "n")
    ell = p.ell
    for a in p.a.members:
        for b in p.b.members:
            if (a & b).bit_count() != ell:
                return False
    p.mark_verified()
    return True


def is_antichain(f: Family) -> bool:
    """True iff no member is contained in a different member."""
    members = f.members
    for i, a in enumerate(members):
        for b in members[i + 1 :]:
            common = a & b
            if common == a or common == b:
                return False
    return True


def support_union(f: Family) -> SubsetMask:
    """Bitwise union of all members."""
    out = 0
    for m in f.members:
        out |= m
    return out


def saturated_elements(f: Family) -> SubsetMask:
    """Elements i such that ``f`` is closed under toggling i.

    These are exactly the elements that contribute a free factor 2 to
    ``|f|``. The empty family is saturated everywhere.
    """
    members = set(f.members)
    out = 0
    for i in range(f.n):
        bit = 1 << i
        if all((m ^ bit) in members for m in members):
            out |= bit
    return out


def relabel_mask(mask: SubsetMask, perm: Sequence[int]) -> SubsetMask:
    """Send element i to ``perm[i - 1]`` (both 1-based)."""
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= 1 << (perm[i] - 1)
        mask >>= 1
        i += 1
    return out


def _check_permutation(perm: Sequence[int], n: int) -> None:
    if sorted(perm) != list(range(1, n + 1)):
        raise StructuralError(
            f"Relabeling is not a permutation of [{n}]", "relabeling"
        )


def relabel_family(f: Family, perm: Sequence[int]) -> Family:
    """Apply a permutation of [n] to every member of ``f``."""
    _check_permutation(perm, f.n)
    return Family.of(f.n, (relabel_mask(m, perm) for m in f.members))


def relabel_pair(p: CrossPair, perm: Sequence[int]) -> CrossPair:
    """Apply the same permutation of [n] to both families.

    :param p: Pair to relabel
    :param perm: ``perm[i - 1]`` is the new label of element i
    :return: Relabeled pair; the ``verified`` flag carries over
    :raises StructuralError: If ``perm`` is not a permutation of [n]
    """
    out = CrossPair(
        a=relabel_family(p.a, perm),
        b=relabel_family(p.b, perm),
        ell=p.ell,
        n=p.n,
    )
    return out.mark_verified() if p.verified else out
