"""Sperner-type bounds and the bipartite LYM machinery.

For a split of [n] into U = [u] and V = [n] ∖ [u], a family whose members
are pairwise incomparable on U or on V satisfies the bipartite LYM
inequality, and hence has at most C(u, ⌊u/2⌋)·C(n−u, ⌊(n−u)/2⌋) members.
"""

from fractions import Fraction
from math import comb
from typing import Dict, Tuple

from ..core.predicates import is_antichain
from ..exceptions import ParameterError
from ..models.families import Family


def _check_split(u: int, n: int) -> None:
    if not 0 <= u <= n:
        raise ParameterError(f"u must lie in [0, {n}]", "u", u)


def _split_masks(u: int, n: int) -> Tuple[int, int]:
    low = (1 << u) - 1
    return low, ((1 << n) - 1) ^ low


def sperner_bound(n: int) -> int:
    """C(n, ⌊n/2⌋), the largest antichain on [n]."""
    if n < 0:
        raise ParameterError("n must be nonnegative", "n", n)
    return comb(n, n // 2)


def lym_sum(f: Family, u: int) -> Fraction:
    """Σ 1 / (C(u, |A∩U|)·C(n−u, |A∩V|)) over the members of ``f``."""
    _check_split(u, f.n)
    low, high = _split_masks(u, f.n)
    total = Fraction(0)
    for m in f.members:
        total += Fraction(
            1,
            comb(u, (m & low).bit_count())
            * comb(f.n - u, (m & high).bit_count()),
        )
    return total


def bipartite_hypothesis(f: Family, u: int) -> bool:
    """True iff ``f`` is an antichain and |A∩V| = g(|A∩U|) for a
    single-valued non-decreasing g."""
    _check_split(u, f.n)
    if not is_antichain(f):
        return False
    low, high = _split_masks(u, f.n)
    g: Dict[int, int] = {}
    for m in f.members:
        x, y = (m & low).bit_count(), (m & high).bit_count()
        if g.setdefault(x, y) != y:
            return False
    values = [g[x] for x in sorted(g)]
    return all(a <= b for a, b in zip(values, values[1:]))


def _incomparable(x: int, y: int) -> bool:
    common = x & y
    return common != x and common != y


def incomparable_split_hypothesis(f: Family, u: int) -> bool:
    """True iff any two distinct members are incomparable on U or on V."""
    _check_split(u, f.n)
    low, high = _split_masks(u, f.n)
    members = f.members
    for i, a in enumerate(members):
        for b in members[i + 1 :]:
            if not (
                _incomparable(a & low, b & low)
                or _incomparable(a & high, b & high)
            ):
                return False
    return True


def bipartite_bound(u: int, n: int) -> int:
    """C(u, ⌊u/2⌋)·C(n−u, ⌊(n−u)/2⌋)."""
    _check_split(u, n)
    return comb(u, u // 2) * comb(n - u, (n - u) // 2)
