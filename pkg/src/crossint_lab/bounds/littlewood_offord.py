"""Littlewood–Offord counting and the sumset inequality."""

import logging
from fractions import Fraction
from math import comb, lcm
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from ..exceptions import ParameterError, PreconditionError
from ..models.bounds import IntervalUnion

logger = logging.getLogger(__name__)

LO_MAX_TERMS = 24


def middle_indices(n: int, m: int) -> List[int]:
    """Indices of the m middle binomial coefficients of row n.

    Starts at ⌊n/2⌋ and alternates outward, upper side first.
    """
    if not 0 <= m <= n + 1:
        raise ParameterError(f"m must lie in [0, {n + 1}]", "m", m)
    center = n // 2
    out = [center]
    step = 1
    while len(out) < n + 1:
        for index in (center + step, center - step):
            if 0 <= index <= n:
                out.append(index)
        step += 1
    return out[:m]


def middle_binomial_sum(n: int, m: int) -> int:
    """Sum of the m largest binomial coefficients C(n, ·)."""
    return sum(comb(n, i) for i in middle_indices(n, m))


def lo_bound(n: int, intervals: int) -> int:
    """Upper bound on ``lo_count`` for n terms and that many intervals.

    More than n + 1 intervals cannot catch more than all 2^n sub-sums, so
    the interval count is capped at n + 1.
    """
    if intervals < 0:
        raise ParameterError(
            "intervals must be nonnegative", "intervals", intervals
        )
    return middle_binomial_sum(n, min(intervals, n + 1))


def lo_count(a: Sequence[Fraction], t: IntervalUnion) -> int:
    """Count subsets I ⊆ [len(a)] with Σ_{i∈I} a_i in ``t``.

    The empty subset counts (its sum is 0). Everything is scaled to a
    common denominator first, so the enumeration runs on integers.

    :raises PreconditionError: On a zero entry, more than 24 entries, or
        an interval wider than min |a_i|
    """
    values = [Fraction(x) for x in a]
    if any(x == 0 for x in values):
        raise PreconditionError("All a_i must be nonzero", "lo_count")
    if len(values) > LO_MAX_TERMS:
        raise PreconditionError(
            f"At most {LO_MAX_TERMS} terms are enumerated", "lo_count"
        )
    if values and t.max_width > min(abs(x) for x in values):
        raise PreconditionError(
            "Every interval must be at most min |a_i| wide", "lo_count"
        )

    endpoints = [x for pair in t.intervals for x in pair]
    scale = lcm(1, *(x.denominator for x in values + endpoints))
    ints = [int(x * scale) for x in values]
    bounds = [(int(lo * scale), int(hi * scale)) for lo, hi in t.intervals]

    sums = [0]
    for x in ints:
        sums += [s + x for s in sums]
    return sum(1 for s in sums if any(lo <= s < hi for lo, hi in bounds))


def tightness_instance(
    m: int, alpha: Fraction = Fraction(1), intervals: int = 1
) -> Tuple[List[Fraction], IntervalUnion]:
    """Entries ±α (⌈m/2⌉ plus, ⌊m/2⌋ minus) with intervals on which
    ``lo_count`` meets ``middle_binomial_sum(m, intervals)`` exactly.

    Subset sums are α·d and the value d is reached by C(m, ⌊m/2⌋ + d)
    subsets, so unit intervals at the middle values of d are tight.
    """
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ParameterError("alpha must be positive", "alpha", alpha)
    minus = m // 2
    a = [alpha] * (m - minus) + [-alpha] * minus
    ds = [i - minus for i in middle_indices(m, intervals)]
    return a, IntervalUnion(
        intervals=[(d * alpha, (d + 1) * alpha) for d in ds]
    )


def sumset(a: Iterable[Fraction], b: Iterable[Fraction]) -> FrozenSet[Fraction]:
    """{x + y : x ∈ a, y ∈ b}; its size is at least |a| + |b| − 1.

    :raises PreconditionError: If either set is empty
    """
    left = {Fraction(x) for x in a}
    right = {Fraction(y) for y in b}
    if not left or not right:
        raise PreconditionError("sumset needs two nonempty sets", "sumset")
    return frozenset(x + y for x in left for y in right)
