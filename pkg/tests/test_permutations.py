"""Statistic vectors, operators, and class predicates.

Derived expectations are frozen from independent oracles implemented here
(direct definition evaluation, inclusion-exclusion counts), never from the
code under test.
"""
import itertools
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulerian.permutations import (
    ALL,
    ALTERNATING,
    BIEXCEDENT,
    CIRCULAR,
    DERANGEMENT,
    FIRST_IS_N,
    LAST_IS_1,
    BudgetError,
    Permutation,
    StatVector,
    SUCCESSION_FREE,
    apply_operators,
    class_size,
    cycle_count,
    delta,
    delta_prime,
    delta_second,
    descent_plus_certificate,
    descent_vector,
    dprime_vector,
    enumerate_class,
    excedance_vector,
    fixed_point_vector,
    is_in_class,
    lambda_op,
    left_to_right_maxima,
    orbits,
    positive_count,
    r_tail_ordered,
    rise_vector,
    signature,
    zeta,
)

RUNNING = Permutation((6, 4, 1, 2, 5, 3))

perm_words = st.integers(min_value=0, max_value=6).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
)


def brute_descent_vector(p):
    """Direct evaluation of the defining formula with explicit boundary
    values, independent of the library's index bookkeeping."""
    n = len(p)

    def sigma(j):
        return p[j - 1] if 1 <= j <= n else 0

    def sigma_inv(k):
        return p.index(k) + 1 if 1 <= k <= n else 0

    return tuple(max(0, sigma(sigma_inv(k) - 1) - (k - 1)) for k in range(1, n + 1))


def brute_rise_vector(p):
    n = len(p)

    def sigma(j):
        return p[j - 1] if 1 <= j <= n else 0

    def sigma_inv(k):
        return p.index(k) + 1 if 1 <= k <= n else 0

    return tuple(max(0, sigma(1 + sigma_inv(k - 1)) - (k - 1)) for k in range(1, n + 1))


class TestVectors:
    def test_excedance_running_example(self):
        assert excedance_vector(RUNNING) == (6, 3, 0, 0, 1, 0)

    def test_excedance_identity_marks_fixed_points(self):
        assert excedance_vector(Permutation.identity(4)) == (1, 1, 1, 1)

    def test_excedance_empty(self):
        assert excedance_vector(Permutation(())) == ()

    def test_descent_running_example(self):
        assert descent_vector(RUNNING) == (4, 0, 3, 3, 0, 0)

    def test_descent_identity(self):
        assert descent_vector(Permutation.identity(3)) == brute_descent_vector((1, 2, 3)) == (0, 0, 0)

    def test_descent_empty(self):
        assert descent_vector(Permutation(())) == ()

    def test_rise_running_example(self):
        assert rise_vector(RUNNING) == (6, 1, 3, 0, 0, 0)

    def test_rise_reversed_example(self):
        assert rise_vector(Permutation((3, 5, 2, 1, 4, 6))) == (3, 3, 0, 2, 2, 0)

    def test_rise_singleton(self):
        assert rise_vector(Permutation((1,))) == brute_rise_vector((1,)) == (1,)

    @given(perm_words)
    @settings(max_examples=120, deadline=None)
    def test_descent_rise_against_brute_force(self, word):
        p = Permutation(word)
        assert descent_vector(p) == brute_descent_vector(tuple(word))
        assert rise_vector(p) == brute_rise_vector(tuple(word))

    def test_dprime_running_image(self):
        tau = Permutation((4, 2, 5, 6, 1, 3))
        assert dprime_vector(tau) == (0, 0, 0, 0, 1, 0)
        assert descent_plus_certificate(tau) == (6, 3, 0, 0, 1, 0)

    def test_dprime_identity_all_ones(self):
        n = 5
        assert dprime_vector(Permutation.identity(n)) == (1,) * n

    def test_dprime_singleton(self):
        assert dprime_vector(Permutation((1,))) == (1,)

    def test_fixed_points_running_example(self):
        assert fixed_point_vector(RUNNING) == (0, 0, 0, 0, 1, 0)

    def test_fixed_points_identity(self):
        assert fixed_point_vector(Permutation.identity(4)) == (1, 1, 1, 1)

    def test_fixed_points_derangements_vanish(self):
        for p in enumerate_class(4, DERANGEMENT):
            assert fixed_point_vector(p) == (0, 0, 0, 0)


class TestOperators:
    def test_delta_examples(self):
        v = StatVector((6, 3, 0, 0, 1, 0))
        assert delta(v) == (5, 2, 0, 0, 0)
        assert delta(StatVector((1, 1))) == (0,)
        assert delta(delta(v)) == (4, 1, 0, 0)

    def test_delta_prime_examples(self):
        v = StatVector((6, 3, 0, 0, 1, 0))
        assert delta_prime(v) == (3, 0, 0, 1, 0)
        assert delta_prime(StatVector((5,))) == ()
        assert delta_prime(delta_prime(v)) == (0, 0, 1, 0)

    def test_delta_second_examples(self):
        v = StatVector((6, 3, 0, 0, 1, 0))
        assert delta_second(v) == (6, 3, 0, 0, 1)
        assert delta_second(StatVector((5,))) == ()
        assert delta(delta_prime(v)) == (2, 0, 0, 0)

    def test_lambda_examples(self):
        assert lambda_op(StatVector((6, 3, 0, 0, 1, 0))) == (5, 2, 0, 0, 0, 0)
        assert lambda_op(StatVector(())) == ()
        assert lambda_op(lambda_op(StatVector((3, 1)))) == (1, 0)

    def test_empty_vector_errors(self):
        for op in (delta, delta_prime, delta_second):
            with pytest.raises(ValueError):
                op(StatVector(()))

    def test_positive_count(self):
        assert positive_count(StatVector((6, 3, 0, 0, 1, 0))) == 3
        assert positive_count(StatVector(())) == 0
        assert positive_count(StatVector((5, 2, 0, 0, 0))) == 2

    @given(st.lists(st.integers(min_value=0, max_value=9), min_size=2, max_size=8))
    @settings(max_examples=100, deadline=None)
    def test_operators_commute_pairwise(self, entries):
        v = StatVector(entries)
        assert apply_operators(v, "dp") == apply_operators(v, "pd")
        assert apply_operators(v, "ds") == apply_operators(v, "sd")
        assert apply_operators(v, "ps") == apply_operators(v, "sp")

    @given(st.lists(st.integers(min_value=0, max_value=9), min_size=1, max_size=8))
    @settings(max_examples=100, deadline=None)
    def test_delta_factors_through_lambda(self, entries):
        v = StatVector(entries)
        assert delta(v) == lambda_op(delta_second(v)) == delta_second(lambda_op(v))


class TestStructure:
    def test_orbits_running_example(self):
        assert orbits(RUNNING) == ((1, 6, 3), (2, 4), (5,))
        assert cycle_count(RUNNING) == 3

    def test_identity_orbits(self):
        assert cycle_count(Permutation.identity(5)) == 5
        assert signature(Permutation.identity(5)) == 1

    def test_transposition_signature(self):
        assert cycle_count(Permutation((2, 1))) == 1
        assert signature(Permutation((2, 1))) == -1

    def test_left_to_right_maxima(self):
        assert left_to_right_maxima((4, 2, 5, 6, 1, 3)) == (1, 3, 4)
        assert left_to_right_maxima(Permutation.identity(4)) == (1, 2, 3, 4)
        assert left_to_right_maxima((4, 3, 2, 1)) == (1,)

    @given(perm_words)
    @settings(max_examples=100, deadline=None)
    def test_descent_entries_zero_or_at_least_two(self, word):
        p = Permutation(word)
        d = descent_vector(p)
        assert all(x == 0 or x >= 2 for x in d)
        if len(d):
            assert d[-1] == 0

    @given(perm_words)
    @settings(max_examples=100, deadline=None)
    def test_excedance_split(self, word):
        p = Permutation(word)
        e = excedance_vector(p)
        if len(e):
            assert positive_count(e) == positive_count(fixed_point_vector(p)) + positive_count(delta(e))


class TestClasses:
    def test_section_table_membership(self):
        p = Permutation((2, 1, 4, 3))
        assert is_in_class(p, BIEXCEDENT)
        assert is_in_class(p, ALTERNATING)

    def test_biexcedent_size_four(self):
        members = list(enumerate_class(4, BIEXCEDENT))
        assert len(members) == 5
        assert members == sorted(members)

    def test_class_counts(self):
        assert class_size(4, ALL) == 24
        assert class_size(3, CIRCULAR) == 2
        assert class_size(4, FIRST_IS_N) == 6
        assert class_size(4, LAST_IS_1) == 6

    def test_derangement_counts_inclusion_exclusion(self):
        # oracle: D(n) = sum (-1)^k C(n,k) (n-k)!
        for n in range(7):
            expected = sum((-1) ** k * comb(n, k) * factorial(n - k) for k in range(n + 1))
            assert class_size(n, DERANGEMENT) == expected

    def test_succession_free_matches_filter_oracle(self):
        for n in range(1, 7):
            expected = sum(
                1
                for w in itertools.permutations(range(1, n + 1))
                if w[0] != 1 and all(w[j + 1] != w[j] + 1 for j in range(n - 1))
            )
            assert class_size(n, SUCCESSION_FREE) == expected

    def test_alternating_small_counts(self):
        assert [class_size(n, ALTERNATING) for n in range(1, 7)] == [1, 1, 2, 5, 16, 61]

    def test_r_tail_ordered_size(self):
        for n in range(1, 6):
            for r in range(1, n + 1):
                assert class_size(n, r_tail_ordered(r)) == factorial(n) // factorial(r)

    def test_r_tail_ordered_validation(self):
        with pytest.raises(ValueError):
            is_in_class(Permutation((1, 2)), r_tail_ordered(5))

    def test_budget_errors(self):
        with pytest.raises(BudgetError):
            list(enumerate_class(11, ALL))
        with pytest.raises(BudgetError):
            list(enumerate_class(5, ALL, max_n=4))

    def test_enumeration_is_lexicographic(self):
        words = [tuple(p) for p in enumerate_class(4, ALL)]
        assert words == sorted(words)
        assert len(words) == 24

    def test_zeta(self):
        assert zeta(6) == (2, 3, 4, 5, 6, 1)
        assert zeta(1) == (1,)

    def test_permutation_validation(self):
        with pytest.raises(ValueError):
            Permutation((1, 1))
        with pytest.raises(ValueError):
            Permutation((0, 1))
