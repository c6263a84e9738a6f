"""Unit tests for the counting bounds."""

import random
from fractions import Fraction
from math import comb

import pytest

from crossint_lab.bounds import (
    bipartite_bound,
    bipartite_hypothesis,
    conjectured_max,
    construction_lower_bound,
    frankl_rodl_bound,
    incomparable_split_hypothesis,
    known_upper_bound,
    lo_bound,
    lo_count,
    lym_sum,
    middle_binomial_sum,
    middle_indices,
    span_constant_bound,
    sperner_bound,
    sumset,
    theorem_backed_value,
    tightness_instance,
    weak_constant_bound,
)
from crossint_lab.exceptions import (
    ParameterError,
    PreconditionError,
    StructuralError,
)
from crossint_lab.models.bounds import IntervalUnion
from crossint_lab.models.families import Family


class TestAntichains:
    @pytest.mark.parametrize("n,expected", [(0, 1), (1, 1), (4, 6), (5, 10)])
    def test_sperner(self, n, expected):
        assert sperner_bound(n) == expected

    def test_middle_layer_is_tight(self):
        f = Family.of(4, [m for m in range(16) if bin(m).count("1") == 2])
        assert lym_sum(f, 0) == 1
        assert len(f) == sperner_bound(4)

    def test_bipartite_bound(self):
        assert bipartite_bound(2, 4) == 4
        assert bipartite_bound(0, 4) == sperner_bound(4)
        with pytest.raises(ParameterError):
            bipartite_bound(5, 4)

    def test_product_of_middle_layers(self):
        # One element of U = {1, 2} and one of V = {3, 4}.
        f = Family.from_sets(4, [{1, 3}, {1, 4}, {2, 3}, {2, 4}])
        assert bipartite_hypothesis(f, 2)
        assert incomparable_split_hypothesis(f, 2)
        assert lym_sum(f, 2) == 1
        assert len(f) == bipartite_bound(2, 4)

    def test_hypotheses_reject(self):
        chain = Family.from_sets(3, [{1}, {1, 2}])
        assert not bipartite_hypothesis(chain, 1)
        assert not incomparable_split_hypothesis(chain, 1)
        # |A∩V| is not a function of |A∩U|.
        f = Family.from_sets(4, [{1, 3}, {2, 3, 4}, {1, 2}])
        assert not bipartite_hypothesis(f, 2)

    def test_random_families_satisfy_lym(self):
        rng = random.Random(42)
        accepted = 0
        while accepted < 1000:
            n = rng.randint(1, 6)
            u = rng.randint(0, n)
            density = rng.choice([0.1, 0.2, 0.3])
            f = Family.of(
                n, (m for m in range(1 << n) if rng.random() < density)
            )
            if not incomparable_split_hypothesis(f, u):
                continue
            accepted += 1
            assert lym_sum(f, u) <= 1
            assert len(f) <= bipartite_bound(u, n)


class TestLittlewoodOfford:
    def test_middle_indices(self):
        assert middle_indices(4, 3) == [2, 3, 1]
        assert middle_indices(3, 4) == [1, 2, 0, 3]
        with pytest.raises(ParameterError):
            middle_indices(3, 5)

    @pytest.mark.parametrize(
        "n,m,expected", [(4, 1, 6), (4, 2, 10), (5, 2, 20), (3, 4, 8)]
    )
    def test_middle_binomial_sum(self, n, m, expected):
        assert middle_binomial_sum(n, m) == expected

    def test_all_ones(self):
        t = IntervalUnion(intervals=[(2, 3)])
        assert lo_count([1, 1, 1, 1], t) == comb(4, 2)

    def test_empty_subset_counts(self):
        assert lo_count([5], IntervalUnion(intervals=[(0, 1)])) == 1

    def test_rational_entries(self):
        t = IntervalUnion(intervals=[(Fraction(1, 2), 1)])
        assert lo_count([Fraction(1, 2), Fraction(1, 2)], t) == 2

    def test_preconditions(self):
        unit = IntervalUnion(intervals=[(0, 1)])
        with pytest.raises(PreconditionError):
            lo_count([1, 0], unit)
        with pytest.raises(PreconditionError):
            lo_count([1, 1], IntervalUnion(intervals=[(0, 2)]))
        with pytest.raises(PreconditionError):
            lo_count([1] * 25, unit)

    @pytest.mark.parametrize("m,intervals", [(6, 1), (7, 2), (8, 3), (1, 1)])
    def test_tightness(self, m, intervals):
        a, t = tightness_instance(m, Fraction(3, 2), intervals)
        assert lo_count(a, t) == middle_binomial_sum(m, intervals)

    def test_random_instances(self):
        rng = random.Random(8)
        for _ in range(1000):
            size = rng.randint(1, 14)
            a = [
                Fraction(
                    rng.choice([-1, 1]) * rng.randint(1, 5), rng.randint(1, 2)
                )
                for _ in range(size)
            ]
            width = min(abs(x) for x in a)
            count = rng.randint(1, 3)
            intervals = []
            lo = Fraction(rng.randint(-10, 0))
            for _ in range(count):
                intervals.append((lo, lo + width))
                lo += width + rng.randint(0, 3)
            t = IntervalUnion(intervals=intervals)
            assert lo_count(a, t) <= lo_bound(size, count)

    def test_more_intervals_than_middle_coefficients(self):
        t = IntervalUnion(intervals=[(0, 1), (1, 2), (5, 6)])
        assert lo_count([1], t) == 2
        assert lo_bound(1, len(t)) == 2

    @pytest.mark.parametrize(
        "n,intervals,expected",
        [(4, 1, 6), (4, 5, 16), (4, 9, 16), (1, 3, 2), (0, 2, 1)],
    )
    def test_lo_bound(self, n, intervals, expected):
        assert lo_bound(n, intervals) == expected

    def test_lo_bound_rejects_negative_count(self):
        with pytest.raises(ParameterError):
            lo_bound(3, -1)

    def test_overlapping_intervals_rejected(self):
        with pytest.raises(StructuralError):
            IntervalUnion(intervals=[(0, 2), (1, 3)])

    def test_sumset(self):
        out = sumset([0, 1, 2], [0, 10])
        assert out == frozenset({0, 1, 2, 10, 11, 12})
        assert len(sumset([0, 1], [0, 1])) == 3
        with pytest.raises(PreconditionError):
            sumset([], [1])


class TestProductBounds:
    @pytest.mark.parametrize(
        "n,ell,expected", [(4, 0, 16), (4, 1, 8), (6, 2, 24), (8, 3, 80)]
    )
    def test_conjectured_max(self, n, ell, expected):
        assert conjectured_max(n, ell) == expected

    def test_conjectured_max_needs_room(self):
        with pytest.raises(ParameterError):
            conjectured_max(3, 2)

    def test_frankl_rodl(self):
        assert frankl_rodl_bound(5, 0) == 32
        assert frankl_rodl_bound(5, 3) == 16

    def test_construction_lower_bound(self):
        assert construction_lower_bound(6, 3) == 20
        assert construction_lower_bound(3, 2) == 1
        assert construction_lower_bound(2, 3) == 0

    @pytest.mark.parametrize(
        "n,ell,upper,exact",
        [
            (5, 0, 32, 32),
            (5, 1, 16, 16),
            (5, 2, 12, 12),
            (7, 3, 64, None),
            (3, 2, 4, None),
        ],
    )
    def test_known_and_exact(self, n, ell, upper, exact):
        assert known_upper_bound(n, ell) == upper
        assert theorem_backed_value(n, ell) == exact

    def test_lower_never_exceeds_upper(self):
        for n in range(1, 13):
            for ell in range(0, n + 1):
                assert construction_lower_bound(n, ell) <= known_upper_bound(
                    n, ell
                )

    def test_numeric_constants(self):
        assert weak_constant_bound(1, 4) == pytest.approx(8.0)
        assert span_constant_bound(1, 1, 4) == pytest.approx(16.0)
        with pytest.raises(ParameterError):
            weak_constant_bound(3, 0)
