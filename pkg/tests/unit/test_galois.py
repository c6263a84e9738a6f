"""Unit tests for the Galois operators and closures."""

import random

from crossint_lab.core import is_cross_intersecting
from crossint_lab.models.families import Family
from crossint_lab.search import (
    alpha_operator,
    beta_operator,
    closure,
    relation_masks,
)
from crossint_lab.search.galois import iter_bits, polar


def test_iter_bits():
    assert list(iter_bits(0b101001)) == [0, 3, 5]
    assert list(iter_bits(0)) == []


def test_relation_rows():
    rows = relation_masks(2, 1)
    # Sets meeting {1} in one element: {1} and {1,2}.
    assert rows[0b01] == (1 << 0b01) | (1 << 0b11)
    assert rows[0] == 0


def test_beta_of_single_set():
    beta = beta_operator(Family.from_sets(3, [{1, 3}]), 1)
    assert beta == Family.from_sets(3, [{1}, {3}, {1, 2}, {2, 3}])


def test_beta_of_empty_family_is_everything():
    assert len(beta_operator(Family.of(3, []), 2)) == 8


def test_alpha_is_beta():
    f = Family.from_sets(3, [{1}, {2}])
    assert alpha_operator(f, 0) == beta_operator(f, 0)


def test_closure_example():
    pair = closure(Family.from_sets(3, [{1, 3}]), 1)
    assert pair.a == Family.from_sets(3, [{1, 3}])
    assert pair.b == Family.from_sets(3, [{1}, {3}, {1, 2}, {2, 3}])
    assert pair.verified


def test_closure_of_inconsistent_family():
    # No set meets both {1} and {2,3} in exactly two elements.
    pair = closure(Family.from_sets(3, [{1}, {2, 3}]), 2)
    assert len(pair.b) == 0
    assert len(pair.a) == 8


def test_galois_laws_on_random_families():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(1, 5)
        ell = rng.randint(0, n)
        f = Family.of(n, (m for m in range(1 << n) if rng.random() < 0.2))
        g = Family.of(
            n,
            set(f.members)
            | {m for m in range(1 << n) if rng.random() < 0.1},
        )
        beta_f = beta_operator(f, ell)
        # Antitone, extensive and idempotent.
        assert set(beta_operator(g, ell).members) <= set(beta_f.members)
        closed = closure(f, ell)
        assert set(f.members) <= set(closed.a.members)
        assert closure(closed.a, ell) == closed
        assert closed.b == beta_f
        assert is_cross_intersecting(closed.model_copy())


def test_polar_short_circuits_on_empty():
    rows = relation_masks(3, 3)
    # A one-element set meets nothing in three elements.
    assert polar((1 << 0b001) | (1 << 0b010), rows, 3) == 0
