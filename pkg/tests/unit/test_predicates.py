"""Unit tests for predicates, relabeling and normalization."""

import random

import pytest

from crossint_lab.constructions import canonical_pair
from crossint_lab.core import (
    intersect_size,
    is_antichain,
    is_cross_intersecting,
    normalize_pair,
    relabel_pair,
    saturated_elements,
    support_union,
)
from crossint_lab.exceptions import PreconditionError, StructuralError
from crossint_lab.models.families import CrossPair, Family
from crossint_lab.models.params import CanonicalParams
from crossint_lab.search import enumerate_closed_pairs

SMALL_CASES = [(n, ell) for n in range(1, 5) for ell in range(0, n + 1)]


def test_intersect_size():
    assert intersect_size(0b0111, 0b1110) == 2
    assert intersect_size(0, 0b1111) == 0


class TestIsCrossIntersecting:
    def test_acz_pair(self, acz_4_1):
        assert is_cross_intersecting(acz_4_1)
        assert acz_4_1.verified

    def test_violation(self):
        pair = CrossPair.build(
            Family.from_sets(3, [{1, 2}]), Family.from_sets(3, [{1}, {3}]), 1
        )
        assert not is_cross_intersecting(pair)
        assert not pair.verified

    def test_empty_family_is_vacuous(self):
        pair = CrossPair.build(Family.of(3, []), Family.of(3, [7]), 2)
        assert is_cross_intersecting(pair)


def test_is_antichain():
    assert is_antichain(Family.from_sets(3, [{1, 2}, {2, 3}, {1, 3}]))
    assert not is_antichain(Family.from_sets(3, [{1}, {1, 2}]))
    assert is_antichain(Family.of(3, []))


def test_support_union_and_saturation():
    f = Family.from_sets(3, [{1}, {1, 3}])
    assert support_union(f) == 0b101
    assert saturated_elements(f) == 0b100
    assert saturated_elements(Family.of(2, [])) == 0b11


class TestRelabel:
    def test_transposition(self):
        pair = CrossPair.build(
            Family.from_sets(3, [{1}]), Family.from_sets(3, [{1, 2}]), 1
        )
        out = relabel_pair(pair, [3, 2, 1])
        assert out.a == Family.from_sets(3, [{3}])
        assert out.b == Family.from_sets(3, [{2, 3}])

    def test_not_a_permutation(self, acz_4_1):
        with pytest.raises(StructuralError):
            relabel_pair(acz_4_1, [1, 1, 2, 3])

    def test_invariance_under_random_permutations(self):
        rng = random.Random(7)
        pair = canonical_pair(
            CanonicalParams(n=6, ell=2, kappa=4, tau=1, nprime=5)
        )
        for _ in range(20):
            perm = list(range(1, 7))
            rng.shuffle(perm)
            moved = relabel_pair(pair, perm)
            assert is_cross_intersecting(moved)
            assert moved.product == pair.product


class TestNormalizePair:
    def test_peels_free_factors(self):
        # X = {4} and Y = {5} around the (ℓ=1, κ=2, τ=1) core.
        pair = canonical_pair(
            CanonicalParams(n=5, ell=1, kappa=2, tau=1, nprime=4)
        )
        reduced, trace = normalize_pair(pair)
        assert trace.removed_from_a_side == (4,)
        assert trace.removed_from_b_side == (5,)
        assert trace.kept_elements == (1, 2, 3)
        assert reduced.n == 3
        assert reduced.product * 2 * 2 == pair.product
        assert reduced.verified
        assert is_cross_intersecting(reduced)

    def test_already_normalized_is_unchanged(self):
        pair = canonical_pair(
            CanonicalParams(n=3, ell=1, kappa=2, tau=1, nprime=3)
        )
        reduced, trace = normalize_pair(pair)
        assert trace.is_empty
        assert reduced == pair

    def test_not_cross_intersecting(self):
        pair = CrossPair.build(
            Family.from_sets(3, [{1, 2}]), Family.from_sets(3, [{1}, {3}]), 1
        )
        with pytest.raises(PreconditionError):
            normalize_pair(pair)

    def test_empty_family(self):
        pair = CrossPair.build(Family.of(3, []), Family.of(3, [1]), 1)
        with pytest.raises(PreconditionError):
            normalize_pair(pair)

    def test_unsaturated_peel(self):
        # Element 2 is in no A, yet B = {{1,2}} is not closed under toggling 2.
        pair = CrossPair.build(
            Family.from_sets(3, [{1}]), Family.from_sets(3, [{1, 2}]), 1
        )
        with pytest.raises(PreconditionError):
            normalize_pair(pair)


class TestClosedPairProperties:
    """Family-core laws checked on every closed pair for n ≤ 4."""

    @pytest.mark.parametrize("n,ell", SMALL_CASES)
    def test_comparable_members_leave_elements_uncovered(self, n, ell):
        full = (1 << n) - 1
        for pair in enumerate_closed_pairs(n, ell):
            for p in (pair, pair.swapped()):
                if not is_antichain(p.a):
                    assert support_union(p.b) != full, p

    def test_comparable_members_occur(self):
        pairs = list(enumerate_closed_pairs(3, 1))
        assert any(
            not is_antichain(p.a) or not is_antichain(p.b) for p in pairs
        )

    @pytest.mark.parametrize("n,ell", SMALL_CASES)
    def test_normalization(self, n, ell):
        for pair in enumerate_closed_pairs(n, ell):
            reduced, trace = normalize_pair(pair)
            full = (1 << reduced.n) - 1
            assert pair.product == 2 ** (n - reduced.n) * reduced.product
            assert reduced.n == trace.reduced_n
            assert is_antichain(reduced.a) and is_antichain(reduced.b)
            assert support_union(reduced.a) == full
            assert support_union(reduced.b) == full
            assert is_cross_intersecting(reduced)

            again, second = normalize_pair(reduced)
            assert second.is_empty
            assert again == reduced
