"""Truncated series arithmetic, matrices, closed forms, and the series-level
identity battery at unit-test scale (the acceptance module pushes the same
checks to their full stated orders)."""
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eulerian.polynomials import Poly, T, abar_polynomial, eulerian_polynomial
from eulerian.series import (
    SquareMatrix,
    TruncSeries,
    biexcedent_weight,
    check_bernoulli_ode,
    check_convolution_recurrence,
    check_cycle_weighted_power,
    check_exponential_formula,
    check_fixed_point_split_relations,
    check_mixed_egf_closed_form,
    check_mixed_egf_exponential_form,
    check_mixed_permanent,
    check_permanent_determinant,
    check_secant_is_exp_integral_tangent,
    check_shifted_egf_powers,
    check_staircase_examples,
    check_tree_equation,
    classical_egf_closed_form,
    constant_series,
    cycle_indicator_weight,
    determinant,
    eulerian_from_egf,
    exp_of_linear,
    exponential_formula_bundle,
    fixed_point_split_weight,
    matrix_entry_weight,
    mixed_egf_closed_form,
    permanent,
    roselle_egf_closed_form,
    series_from_polynomials,
    series_identity,
    specialize_outer,
    tangent_secant_series,
)

rationals = st.fractions(
    min_value=Fraction(-3), max_value=Fraction(3), max_denominator=6
)
small_series = st.lists(rationals, min_size=7, max_size=7).map(
    lambda cs: TruncSeries(6, cs)
)


class TestArithmetic:
    def test_exp_of_zero(self):
        zero = TruncSeries(5)
        assert zero.exp() == constant_series(Fraction(1), 5)

    def test_geometric_reciprocal(self):
        geo = TruncSeries(8, (1, -1)).reciprocal()
        assert all(c == 1 for c in geo.coeffs)

    def test_derivative_of_integral(self):
        s = TruncSeries(5, (3, 1, 4, 1, 5, 9))
        assert s.integral().derivative() == s

    def test_exp_log_roundtrip(self):
        s = TruncSeries(7, (0, 1, Fraction(1, 2), 0, 2))
        assert s.exp().log() == s
        u = TruncSeries(7, (1, 2, Fraction(3, 5)))
        assert series_identity(u.log().exp(), u).ok

    def test_invariant_errors_name_constant_term(self):
        with pytest.raises(ValueError, match="constant term"):
            TruncSeries(3, (1, 1)).exp()
        with pytest.raises(ValueError, match="constant term"):
            TruncSeries(3, (2, 1)).reciprocal()
        with pytest.raises(ValueError, match="constant term"):
            TruncSeries(3, (0, 1)).log()

    def test_order_mismatch(self):
        with pytest.raises(ValueError):
            TruncSeries(3) + TruncSeries(4)

    @given(small_series, small_series)
    @settings(max_examples=50, deadline=None)
    def test_ring_laws(self, a, b):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) - b == a

    @given(small_series)
    @settings(max_examples=50, deadline=None)
    def test_substitution_commutes_with_multiplication(self, s):
        # lift scalars to polynomials in t, multiply, then evaluate at -1:
        # same as evaluating first (the substitution is a ring homomorphism)
        lifted = s.map_coefficients(lambda c: Poly((c,)) + 0 * T)
        tpoly = constant_series(T, 6)
        combined = (lifted * tpoly + lifted).substitute(-1)
        direct = s * Fraction(-1) + s
        assert series_identity(combined, direct).ok

    @given(small_series)
    @settings(max_examples=30, deadline=None)
    def test_substitution_commutes_with_exp(self, s):
        shifted = TruncSeries(6, (0,) + s.coeffs[1:])
        lifted = shifted.map_coefficients(lambda c: Poly((0, c)))  # c * t'
        assert series_identity(lifted.exp().substitute(-1), (shifted * Fraction(-1)).exp()).ok


class TestClosedForms:
    def test_classical_coefficients(self):
        cl = classical_egf_closed_form(6)
        for n in range(7):
            assert cl.coefficient(n) * factorial(n) == eulerian_polynomial(n)

    def test_family_egf_examples(self):
        egf = series_from_polynomials(eulerian_polynomial, 4)
        assert egf.coefficient(2) == Poly((Fraction(1, 2), Fraction(1, 2)))
        assert egf.coefficient(4) == eulerian_polynomial(4) * Fraction(1, 24)
        ordinary = series_from_polynomials(lambda n: factorial(n), 6)
        assert all(c == 1 for c in ordinary.coeffs)
        ones = series_from_polynomials(lambda n: 1, 6)
        assert ones == TruncSeries(6, (0, 1)).exp()

    def test_mixed_closed_form_and_specializations(self):
        for name, ident in check_mixed_egf_closed_form(6):
            assert ident.ok, (name, ident.note)

    def test_mixed_closed_form_bivariate_coefficient(self):
        mixed = mixed_egf_closed_form(3)
        assert mixed.coefficient(2) * 2 == abar_polynomial(2)

    def test_exponential_form(self):
        assert check_mixed_egf_exponential_form(6).ok

    def test_split_relations(self):
        for name, ident in check_fixed_point_split_relations(8):
            assert ident.ok, name

    def test_shifted_powers(self):
        for r in range(1, 6):
            assert check_shifted_egf_powers(r, 8).ok

    def test_bernoulli(self):
        assert check_bernoulli_ode(8).ok
        assert check_convolution_recurrence(8).ok

    def test_convolution_smallest_cases(self):
        a0, a1, a2 = (eulerian_polynomial(n) for n in range(3))
        assert a1 == a0
        assert a2 == a1 + T * a0 * a1

    def test_specialize_outer(self):
        mixed = mixed_egf_closed_form(5)
        at_one = specialize_outer(mixed, 1)
        assert series_identity(at_one, classical_egf_closed_form(5)).ok


class TestExponentialFormula:
    def test_constant_weight_counts_factorials(self):
        eq_exp, eq_inv = check_exponential_formula(lambda w: 1, 5)
        assert eq_exp.ok and eq_inv.ok
        # exp(sum u^n / n) = 1/(1 - u): the plain EGF is the geometric series
        assert all(c == 1 for c in eq_exp.lhs.coeffs)

    def test_cycle_indicator_weight(self):
        xs = [Fraction(k) for k in range(1, 7)]
        eq_exp, eq_inv = check_exponential_formula(cycle_indicator_weight(xs), 5)
        assert eq_exp.ok and eq_inv.ok

    def test_biexcedent_weight(self):
        eq_exp, eq_inv = check_exponential_formula(biexcedent_weight, 6)
        assert eq_exp.ok and eq_inv.ok
        # connected even sizes count the alternating words of odd size below
        conn = eq_exp.rhs  # exp argument side was consumed; recompute simply
        assert eq_exp.lhs.coefficient(4) * factorial(4) == 5

    def test_matrix_weight(self):
        eq_exp, eq_inv = check_exponential_formula(matrix_entry_weight(2, 1, 3), 5)
        assert eq_exp.ok and eq_inv.ok

    def test_fixed_point_split_weight(self):
        eq_exp, eq_inv = check_exponential_formula(fixed_point_split_weight, 5)
        assert eq_exp.ok and eq_inv.ok

    def test_bundle_matches_singles(self):
        bundle = exponential_formula_bundle(
            {"ones": lambda w: 1, "bi": biexcedent_weight}, 4
        )
        assert all(a.ok and b.ok for a, b in bundle.values())

    def test_cycle_weighted_powers(self):
        for r in (1, 2, 3):
            assert check_cycle_weighted_power(r, 5).ok

    def test_tree_equation(self):
        assert check_tree_equation(6).ok


class TestMatrices:
    def test_permanent_and_determinant_basics(self):
        eye = SquareMatrix(((1, 0), (0, 1)))
        assert determinant(eye) == 1 and permanent(eye) == 1
        ones = SquareMatrix.banded(4, 1, 1, 1)
        assert permanent(ones) == 24 and determinant(ones) == 0

    def test_empty_matrix(self):
        m = SquareMatrix(())
        assert permanent(m) == 1 and determinant(m) == 1

    def test_permanent_budget(self):
        from eulerian.permutations import BudgetError

        with pytest.raises(BudgetError):
            permanent(SquareMatrix.banded(10, 1, 1, 1))
        assert permanent(SquareMatrix.banded(10, 1, 1, 1), max_n=10) == factorial(10)

    def test_polynomial_entries(self):
        m = SquareMatrix.banded(3, T, Poly((1,)), 2)
        per = permanent(m)
        det = determinant(m)
        assert per.eval(1) == permanent(SquareMatrix.banded(3, 1, 1, 2))
        assert det.eval(1) == determinant(SquareMatrix.banded(3, 1, 1, 2))

    def test_banded_identities(self):
        for abc in ((2, 1, 3), (1, 1, 1), (2, 5, 2), (0, 3, 1), (3, 3, 3)):
            for name, ident in check_permanent_determinant(*abc, 7):
                assert ident.ok, (abc, name, ident.note)

    def test_staircase_examples(self):
        for name, ident in check_staircase_examples(7):
            assert ident.ok, name

    def test_mixed_permanent(self):
        assert check_mixed_permanent(5).ok


class TestTangentSecant:
    def test_table_coefficients(self):
        tan, sec = tangent_secant_series(14)
        assert tan.coefficient(1) == 1
        assert tan.coefficient(3) * factorial(3) == 2
        assert tan.coefficient(5) * factorial(5) == 16
        assert sec.coefficient(0) == 1
        assert sec.coefficient(2) * 2 == 1
        assert sec.coefficient(10) * factorial(10) == 50521
        assert sec.coefficient(14) * factorial(14) == 199360981

    def test_parities(self):
        tan, sec = tangent_secant_series(9)
        assert all(tan.coefficient(2 * k) == 0 for k in range(5))
        assert all(sec.coefficient(2 * k + 1) == 0 for k in range(4))

    def test_exp_integral_identity(self):
        assert check_secant_is_exp_integral_tangent(10).ok

    def test_roselle_closed_form_at_minus_one(self):
        g = roselle_egf_closed_form(8).substitute(-1)
        assert g.coefficient(8) * factorial(8) == 1385

    def test_egf_extraction(self):
        from eulerian.polynomials import eulerian_triangle_recurrence

        for n in range(1, 7):
            for r in range(1, n + 1):
                assert eulerian_from_egf(n, r) == eulerian_triangle_recurrence(n, r)

    def test_exp_of_linear(self):
        e = exp_of_linear(Fraction(2), 5)
        assert e.coefficient(3) == Fraction(8, 6)
        ep = exp_of_linear(T - 1, 3)
        assert ep.coefficient(2) == (T - 1) ** 2 * Fraction(1, 2)
