"""Canonical factorization of self-maps and the tree-like map counts.

The literal iterate definitions serve as oracles for the structural
implementations at small sizes.
"""
import itertools

import pytest

from eulerian.endofunctions import (
    FunctionMap,
    canonical_factorization,
    connected_count,
    count_class_functions,
    is_connected,
    subdomains,
)
from eulerian.permutations import BudgetError, Permutation, excedance_vector


def iterate(word, k):
    out = tuple(range(1, len(word) + 1))
    for _ in range(k):
        out = tuple(word[v - 1] for v in out)
    return out


def literal_ultimately_idempotent(word):
    n = len(word)
    return iterate(word, n) == iterate(word, n - 1)


def literal_arborescence(word):
    n = len(word)
    return len(set(iterate(word, n - 1))) == 1


class TestFactorization:
    def test_permutation_factors_are_relabelled_cycles(self):
        f = FunctionMap((6, 4, 1, 2, 5, 3))
        factors = canonical_factorization(f)
        assert [dom for _, dom in factors] == [(1, 3, 6), (2, 4), (5,)]
        assert [len(g) for g, _ in factors] == [3, 2, 1]
        assert all(is_connected(g) for g, _ in factors)

    def test_constant_map_single_factor(self):
        f = FunctionMap((1, 1, 1, 1))
        assert connected_count(f) == 1
        ((g, dom),) = canonical_factorization(f)
        assert dom == (1, 2, 3, 4)
        assert tuple(g) == (1, 1, 1, 1)

    def test_identity_map_factors(self):
        f = FunctionMap((1, 2, 3))
        factors = canonical_factorization(f)
        assert len(factors) == 3
        assert all(tuple(g) == (1,) for g, _ in factors)

    def test_factors_preserve_excedance_pattern(self):
        # the increasing relabelling keeps the sign of f(i) - i pointwise
        for word in itertools.product(range(1, 5), repeat=4):
            f = FunctionMap(word)
            for g, dom in canonical_factorization(f):
                for local, orig in enumerate(dom, start=1):
                    lhs = (f(orig) > orig) - (f(orig) < orig)
                    rhs = (g(local) > local) - (g(local) < local)
                    assert lhs == rhs

    def test_permutation_factor_excedances_sum(self):
        p = Permutation((6, 4, 1, 2, 5, 3))
        total = sum(
            sum(1 for k, v in enumerate(g, start=1) if v > k)
            for g, _ in canonical_factorization(FunctionMap(tuple(p)))
        )
        strict = sum(1 for k, v in enumerate(p, start=1) if v > k)
        assert total == strict == 2
        assert excedance_vector(p) == (6, 3, 0, 0, 1, 0)

    def test_subdomains_partition(self):
        for word in itertools.product(range(1, 4), repeat=3):
            doms = subdomains(word)
            flat = sorted(x for d in doms for x in d)
            assert flat == [1, 2, 3]

    def test_validation(self):
        with pytest.raises(ValueError):
            FunctionMap((0, 1))
        with pytest.raises(ValueError):
            FunctionMap((3,))


class TestCounts:
    def test_structural_matches_literal_definitions(self):
        for n in range(1, 6):
            ui = li = arb = larb = 0
            for word in itertools.product(range(1, n + 1), repeat=n):
                li += literal_ultimately_idempotent(word)
                larb += literal_arborescence(word)
            ui = count_class_functions(n, "ultimately_idempotent")
            arb = count_class_functions(n, "arborescence")
            assert ui == li
            assert arb == larb

    def test_known_values(self):
        assert count_class_functions(0, "ultimately_idempotent") == 1
        assert count_class_functions(1, "arborescence") == 1
        assert count_class_functions(2, "arborescence") == 2

    def test_tree_count_relation(self):
        for n in range(1, 7):
            assert count_class_functions(n, "arborescence") == n * count_class_functions(
                n - 1, "ultimately_idempotent"
            )

    def test_budget(self):
        with pytest.raises(BudgetError):
            count_class_functions(8, "arborescence")
        with pytest.raises(ValueError):
            count_class_functions(3, "nonsense")
