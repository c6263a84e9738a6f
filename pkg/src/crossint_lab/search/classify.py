"""Classification of pairs against the canonical extremal families.

Two pairs are the same up to relabeling iff their element/member
incidence graphs are isomorphic with element nodes matched to element
nodes and A members to A members. Elements are labeled with their
(A-degree, B-degree) invariant so the VF2 matcher only tries compatible
images.
"""

import logging
from collections import Counter
from functools import lru_cache
from typing import Dict, Optional, Sequence, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from ..constructions.canonical import canonical_pair, legal_canonical_params
from ..core.predicates import is_cross_intersecting, relabel_pair
from ..models.families import CrossPair, Family
from ..models.params import CanonicalParams
from ..models.search import ClassificationResult

logger = logging.getLogger(__name__)


def _incidence_graph(p: CrossPair) -> nx.Graph:
    degrees_a = [0] * p.n
    degrees_b = [0] * p.n
    for side, family in (("a", p.a), ("b", p.b)):
        counts = degrees_a if side == "a" else degrees_b
        for m in family.members:
            for j in range(p.n):
                if m >> j & 1:
                    counts[j] += 1

    g = nx.Graph()
    for j in range(p.n):
        g.add_node(("e", j + 1), kind="e", label=(degrees_a[j], degrees_b[j]))
    for side, family in (("a", p.a), ("b", p.b)):
        for m in family.members:
            node = (side, m)
            g.add_node(node, kind=side, label=m.bit_count())
            for j in range(p.n):
                if m >> j & 1:
                    g.add_edge(node, ("e", j + 1))
    return g


def _same_node(u: Dict[str, object], v: Dict[str, object]) -> bool:
    return u["kind"] == v["kind"] and u["label"] == v["label"]


def _size_profile(f: Family) -> Counter:
    return Counter(m.bit_count() for m in f.members)


def _quick_compatible(source: CrossPair, target: CrossPair) -> bool:
    return (
        source.n == target.n
        and source.ell == target.ell
        and len(source.a) == len(target.a)
        and len(source.b) == len(target.b)
        and _size_profile(source.a) == _size_profile(target.a)
        and _size_profile(source.b) == _size_profile(target.b)
    )


def find_relabeling(
    source: CrossPair, target: CrossPair
) -> Optional[Tuple[int, ...]]:
    """A permutation π with relabel_pair(source, π) == target, if any.

    ``π[c - 1]`` is the target element playing source element c. The
    identity is tried first.
    """
    if not _quick_compatible(source, target):
        return None
    identity = tuple(range(1, source.n + 1))
    if source.a == target.a and source.b == target.b:
        return identity
    matcher = GraphMatcher(
        _incidence_graph(source),
        _incidence_graph(target),
        node_match=_same_node,
    )
    for mapping in matcher.isomorphisms_iter():
        return tuple(mapping[("e", c)][1] for c in identity)
    return None


def is_isomorphic_pair(
    p: CrossPair, q: CrossPair, allow_swap: bool = True
) -> bool:
    """True iff q is p up to relabeling (and swapping A and B)."""
    if find_relabeling(p, q) is not None:
        return True
    return allow_swap and find_relabeling(p.swapped(), q) is not None


def apply_relabeling(
    p: CrossPair, relabeling: Sequence[int], swapped: bool = False
) -> CrossPair:
    """Relabel a (canonical) pair and optionally exchange its sides."""
    out = relabel_pair(p, relabeling)
    return out.swapped() if swapped else out


@lru_cache(maxsize=256)
def _cached_canonical(params: CanonicalParams) -> CrossPair:
    return canonical_pair(params)


def classify_extremal(p: CrossPair) -> ClassificationResult:
    """Match ``p`` against every canonical pair for its (n, ℓ).

    Parameters are tried with κ descending, τ ascending, n′ ascending,
    unswapped before swapped; the first match wins. A pair that is not
    cross-intersecting never matches.
    """
    if not (p.verified or is_cross_intersecting(p)):
        return ClassificationResult(matched=False)
    swapped_p = p.swapped()
    for params in legal_canonical_params(p.n, p.ell):
        canonical = _cached_canonical(params)
        if canonical.product != p.product:
            continue
        for swapped, target in ((False, p), (True, swapped_p)):
            relabeling = find_relabeling(canonical, target)
            if relabeling is not None:
                logger.debug(
                    "Matched %s (swapped=%s)", params.model_dump(), swapped
                )
                return ClassificationResult(
                    matched=True,
                    params=params,
                    swapped=swapped,
                    relabeling=relabeling,
                )
    return ClassificationResult(matched=False)
