"""Unit tests for the family and pair models."""

import pytest

from crossint_lab.exceptions import ParameterError, StructuralError
from crossint_lab.models.families import (
    CrossPair,
    Family,
    ReductionTrace,
    elements_of,
    mask_of,
    submasks,
)


class TestMasks:
    def test_mask_of_and_elements_of(self):
        assert mask_of([1, 3]) == 0b101
        assert elements_of(0b101) == (1, 3)
        assert elements_of(0) == ()

    def test_mask_of_rejects_nonpositive(self):
        with pytest.raises(StructuralError):
            mask_of([0, 2])

    def test_submasks_ascending(self):
        assert submasks(0b101) == [0, 1, 4, 5]
        assert submasks(0) == [0]


class TestFamily:
    def test_members_are_sorted_and_deduplicated(self):
        f = Family.of(3, [5, 2, 5, 0])
        assert f.members == (0, 2, 5)
        assert len(f) == 3
        assert 5 in f and 1 not in f

    def test_from_sets_matches_masks(self):
        f = Family.from_sets(3, [{1, 3}, {2}])
        assert f == Family.of(3, [2, 5])
        assert f.as_sets() == [frozenset({2}), frozenset({1, 3})]

    def test_power_set(self):
        f = Family.power_set(4, 0b1010)
        assert f.members == (0, 2, 8, 10)

    def test_universe_mask(self):
        assert Family.of(2, [0, 3]).universe_mask == (1 << 0) | (1 << 3)

    def test_member_outside_ground_set(self):
        with pytest.raises(StructuralError):
            Family.of(2, [4])

    @pytest.mark.parametrize("n", [-1, 25])
    def test_ground_set_range(self, n):
        with pytest.raises(StructuralError):
            Family.of(n, [])

    def test_empty_ground_set_allowed(self):
        assert Family.of(0, [0]).members == (0,)


class TestCrossPair:
    def test_build_takes_n_from_a(self, acz_4_1):
        assert acz_4_1.n == 4
        assert acz_4_1.product == 8

    def test_mismatched_ground_sets(self):
        with pytest.raises(StructuralError):
            CrossPair.build(Family.of(3, [1]), Family.of(4, [1]), 1)

    def test_negative_ell(self):
        with pytest.raises(ParameterError):
            CrossPair.build(Family.of(3, [1]), Family.of(3, [1]), -1)

    def test_equality_ignores_verification(self, acz_4_1):
        from crossint_lab.core import is_cross_intersecting

        copy = CrossPair.build(acz_4_1.a, acz_4_1.b, 1)
        assert is_cross_intersecting(acz_4_1)
        assert acz_4_1.verified and not copy.verified
        assert acz_4_1 == copy
        assert hash(acz_4_1) == hash(copy)

    def test_swapped_keeps_flag(self, acz_4_1):
        from crossint_lab.core import is_cross_intersecting

        is_cross_intersecting(acz_4_1)
        swapped = acz_4_1.swapped()
        assert swapped.a == acz_4_1.b and swapped.b == acz_4_1.a
        assert swapped.verified

    def test_build_can_mark_verified(self):
        a = Family.from_sets(3, [{1, 2}])
        b = Family.from_sets(3, [{1}, {2}])
        assert not CrossPair.build(a, b, 1).verified
        assert CrossPair.build(a, b, 1, verified=True).verified

    def test_mark_verified_returns_the_pair(self):
        pair = CrossPair.build(Family.of(2, [1]), Family.of(2, [3]), 1)
        assert pair.mark_verified() is pair
        assert pair.verified


class TestReductionTrace:
    def test_accounting(self):
        trace = ReductionTrace(
            removed_from_a_side=(3,),
            kept_elements=(1, 2),
            original_n=3,
            reduced_n=2,
        )
        assert not trace.is_empty

    def test_overlap_rejected(self):
        with pytest.raises(StructuralError):
            ReductionTrace(
                removed_from_a_side=(1,),
                removed_from_b_side=(1,),
                original_n=2,
                reduced_n=0,
            )

    def test_count_mismatch_rejected(self):
        with pytest.raises(StructuralError):
            ReductionTrace(original_n=3, reduced_n=2)
