"""Randomized property checks behind the hidden ``selftest`` command.

Each check draws its instances from its own ``random.Random`` seeded from
the command-line seed, so a failing round can be replayed exactly.
"""

import logging
import random
from fractions import Fraction
from typing import Callable, Dict, List

from ..bounds import (
    bipartite_bound,
    bipartite_hypothesis,
    conjectured_max,
    incomparable_split_hypothesis,
    lo_bound,
    lo_count,
    lym_sum,
    sumset,
)
from ..constructions import canonical_pair, legal_canonical_params
from ..core import is_cross_intersecting
from ..models.bounds import IntervalUnion
from ..models.families import Family
from ..models.matrices import RationalMatrix
from ..search.galois import beta_operator
from ..spectra import classify_rows, replay_selection

logger = logging.getLogger(__name__)

Check = Callable[[random.Random], bool]


def _random_family(rng: random.Random, n: int, density: float) -> Family:
    return Family.of(
        n, (m for m in range(1 << n) if rng.random() < density)
    )


def check_littlewood_offord(rng: random.Random) -> bool:
    size = rng.randint(1, 12)
    a = [
        Fraction(rng.choice([-1, 1]) * rng.randint(1, 6), rng.randint(1, 3))
        for _ in range(size)
    ]
    width = min(abs(x) for x in a)
    starts = sorted({Fraction(rng.randint(-12, 12), 2) for _ in range(3)})
    intervals = []
    for lo in starts:
        hi = lo + width
        if intervals and lo < intervals[-1][1]:
            continue
        intervals.append((lo, hi))
    t = IntervalUnion(intervals=intervals)
    return lo_count(a, t) <= lo_bound(size, len(t))


def check_bipartite_lym(rng: random.Random) -> bool:
    n = rng.randint(1, 7)
    u = rng.randint(0, n)
    f = _random_family(rng, n, rng.choice([0.1, 0.2, 0.35]))
    if not incomparable_split_hypothesis(f, u):
        return True
    if lym_sum(f, u) > 1:
        return False
    if bipartite_hypothesis(f, u) and len(f) > bipartite_bound(u, n):
        return False
    return True


def check_sumset(rng: random.Random) -> bool:
    a = {Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(5)}
    b = {Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(5)}
    return len(sumset(a, b)) >= len(a) + len(b) - 1


def check_galois_laws(rng: random.Random) -> bool:
    n = rng.randint(1, 5)
    ell = rng.randint(0, n)
    f = _random_family(rng, n, 0.2)
    g = Family.of(n, set(f.members) | set(_random_family(rng, n, 0.1).members))
    beta_f = beta_operator(f, ell)
    beta_g = beta_operator(g, ell)
    closed = beta_operator(beta_f, ell)
    return (
        set(beta_g.members) <= set(beta_f.members)
        and set(f.members) <= set(closed.members)
        and beta_operator(closed, ell) == beta_f
    )


def check_row_classification(rng: random.Random) -> bool:
    width = rng.randint(1, 6)
    rows = [
        [rng.choice([0, 0, 0, 1, -1, 2, -2]) for _ in range(width)]
        for _ in range(rng.randint(1, 7))
    ]
    m = RationalMatrix(rows, width)
    result = classify_rows(m, rng.choice(["max-column", "first-column"]))
    everything = sorted(result.r_rows + result.s_rows + result.c_rows)
    if everything != list(range(m.nrows)):
        return False
    rest = result.s_rows + result.c_rows
    for col in range(m.ncols):
        if sum(1 for i in rest if m[i, col] != 0) > 1:
            return False
    if any(-1 not in m.row(i) for i in result.c_rows):
        return False
    replay = replay_selection(m, result.selected_columns)
    return replay.r_rows == result.r_rows


def check_canonical_identity(rng: random.Random) -> bool:
    ell = rng.randint(0, 3)
    n = rng.randint(max(1, 2 * ell), 9)
    params = rng.choice(legal_canonical_params(n, ell))
    pair = canonical_pair(params)
    return is_cross_intersecting(pair) and pair.product == conjectured_max(
        n, ell
    )


CHECKS: Dict[str, Check] = {
    "littlewood-offord": check_littlewood_offord,
    "bipartite-lym": check_bipartite_lym,
    "sumset": check_sumset,
    "galois-laws": check_galois_laws,
    "row-classification": check_row_classification,
    "canonical-identity": check_canonical_identity,
}


def run_selftest(seed: int, rounds: int) -> Dict[str, List[int]]:
    """Run every check ``rounds`` times; return failing rounds per check."""
    failures: Dict[str, List[int]] = {}
    for offset, (name, check) in enumerate(CHECKS.items()):
        rng = random.Random(seed * 1000 + offset)
        failed = [i for i in range(rounds) if not check(rng)]
        failures[name] = failed
        if failed:
            logger.error("Check %s failed in rounds %s", name, failed[:10])
    return failures
