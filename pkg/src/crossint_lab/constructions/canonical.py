"""The ACZ pair and the parametrized canonical extremal pairs."""

import logging
from itertools import combinations, product
from typing import List

from ..exceptions import ParameterError
from ..models.families import CrossPair, Family, SubsetMask, submasks
from ..models.params import CanonicalParams

logger = logging.getLogger(__name__)


def _range_mask(first: int, last: int) -> SubsetMask:
    """Mask of the elements first..last (1-based, inclusive)."""
    if last < first:
        return 0
    return ((1 << (last - first + 1)) - 1) << (first - 1)


def _with_free_part(cores: List[SubsetMask], free: SubsetMask) -> List[int]:
    extensions = submasks(free)
    return [core | x for core in cores for x in extensions]


def acz_pair(n: int, ell: int) -> CrossPair:
    """The single-set construction: A = {[2ℓ]}, B = all sets meeting it in ℓ.

    :param n: Ground-set size, n ≥ 2ℓ
    :param ell: Target intersection size, ℓ ≥ 0
    :return: A pair with product C(2ℓ, ℓ)·2^{n−2ℓ}
    :raises ParameterError: If n < 2ℓ, ℓ < 0 or n < 1
    """
    if ell < 0:
        raise ParameterError("ell must be nonnegative", "ell", ell)
    if n < max(1, 2 * ell):
        raise ParameterError(
            f"acz_pair needs n >= max(1, 2*ell), got n={n}", "n", n
        )
    core = _range_mask(1, 2 * ell)
    cores = [
        sum(1 << i for i in chosen)
        for chosen in combinations(range(2 * ell), ell)
    ]
    b = _with_free_part(cores, _range_mask(2 * ell + 1, n))
    return CrossPair.build(Family.of(n, [core]), Family.of(n, b), ell)


def canonical_pair(p: CanonicalParams) -> CrossPair:
    """Build the canonical extremal pair for parameters (n, ℓ, κ, τ, n′).

    The κ objects are the pairs {i, κ+i} for i ≤ τ and the singletons
    {τ+1}, ..., {κ}. A takes every union of ℓ objects, B every set that
    picks one element of each pair plus all singletons; A is crossed with
    2^X for X = {κ+τ+1..n′} and B with 2^Y for Y = {n′+1..n}.

    Example:
        >>> pair = canonical_pair(CanonicalParams(n=3, ell=1, kappa=2,
        ...                                       tau=1, nprime=3))
        >>> pair.a.as_sets(), pair.b.as_sets()
        ([frozenset({2}), frozenset({1, 3})], [frozenset({1, 2}), frozenset({2, 3})])
    """
    kappa, tau = p.kappa, p.tau
    objects = [
        (1 << (i - 1)) | (1 << (kappa + i - 1)) for i in range(1, tau + 1)
    ]
    objects += [1 << (i - 1) for i in range(tau + 1, kappa + 1)]
    a_cores = [sum(chosen) for chosen in combinations(objects, p.ell)]

    singletons = _range_mask(tau + 1, kappa)
    pair_choices = [
        (1 << (i - 1), 1 << (kappa + i - 1)) for i in range(1, tau + 1)
    ]
    b_cores = [singletons | sum(pick) for pick in product(*pair_choices)]

    a = _with_free_part(a_cores, _range_mask(kappa + tau + 1, p.nprime))
    b = _with_free_part(b_cores, _range_mask(p.nprime + 1, p.n))
    return CrossPair.build(Family.of(p.n, a), Family.of(p.n, b), p.ell)


def legal_canonical_params(n: int, ell: int) -> List[CanonicalParams]:
    """All legal parameter tuples for (n, ℓ).

    Ordered by κ descending, then τ ascending, then n′ ascending. For
    ℓ = 0 only κ = τ = 0 occurs.
    """
    if n < 1 or ell < 0:
        return []
    kappas = [0] if ell == 0 else [2 * ell, 2 * ell - 1]
    out = []
    for kappa in kappas:
        for tau in range(kappa + 1):
            for nprime in range(kappa + tau, n + 1):
                out.append(
                    CanonicalParams(
                        n=n, ell=ell, kappa=kappa, tau=tau, nprime=nprime
                    )
                )
    return out
