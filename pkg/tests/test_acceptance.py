"""Acceptance suite: every criterion at its full stated scale, exact
arithmetic throughout, one printed pass/fail line per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as the
criteria complete. These tests are heavier than the unit suites (full
symmetric groups up to size 10, truncation order 10); the whole module
stays within a few minutes.
"""
import time
from fractions import Fraction
from math import factorial

from eulerian import polynomials as poly
from eulerian import series as ser
from eulerian import transforms as tr
from eulerian import words
from eulerian.permutations import (
    ALTERNATING,
    Permutation,
    class_size,
    delta,
    delta_prime,
    delta_second,
    descent_vector,
    enumerate_class,
    excedance_vector,
    rise_vector,
    BIEXCEDENT,
)
from eulerian.polynomials import Poly

EULER_TABLE = (1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521, 353792, 2702765, 22368256, 199360981)

REDUCED_TABLE = {
    1: {
        1: (1,),
        2: (1, 1),
        3: (1, 4, 1),
        4: (1, 11, 11, 1),
        5: (1, 26, 66, 26, 1),
        6: (1, 57, 302, 302, 57, 1),
        7: (1, 120, 1191, 2416, 1191, 120, 1),
        8: (1, 247, 4293, 15619, 15619, 4293, 247, 1),
    },
    2: {
        2: (1,),
        3: (2, 1),
        4: (4, 7, 1),
        5: (8, 33, 18, 1),
        6: (16, 131, 171, 41, 1),
        7: (32, 473, 1208, 718, 88, 1),
        8: (64, 1611, 7197, 8422, 2682, 183, 1),
    },
    3: {
        3: (1,),
        4: (3, 1),
        5: (9, 10, 1),
        6: (27, 67, 25, 1),
        7: (81, 376, 326, 56, 1),
        8: (243, 1909, 3134, 1314, 119, 1),
    },
    4: {
        4: (1,),
        5: (4, 1),
        6: (16, 13, 1),
        7: (64, 113, 32, 1),
        8: (256, 821, 531, 71, 1),
    },
    5: {
        5: (1,),
        6: (5, 1),
        7: (25, 16, 1),
        8: (125, 171, 39, 1),
    },
}


def _report(criterion: str, started: float) -> None:
    print(f"ACCEPTANCE {criterion}: PASS ({time.perf_counter() - started:.1f}s)", flush=True)


def test_criterion_1_table_reproduction():
    started = time.perf_counter()
    for r, rows in REDUCED_TABLE.items():
        for n, reduced in rows.items():
            expected = Poly(tuple(factorial(r) * c for c in reduced))
            assert poly.eulerian_triangle_recurrence(n, r) == expected, (r, n, "triangle")
            assert poly.eulerian_shift_recurrence(n, r) == expected, (r, n, "shift")
            assert poly.eulerian_explicit(n, r) == expected, (r, n, "explicit")
            assert ser.eulerian_from_egf(n, r) == expected, (r, n, "egf")
            assert poly.eulerian_by_enumeration(n, r) == expected, (r, n, "enumeration")
    # the sample coefficients called out by name
    assert REDUCED_TABLE[1][8][3] == 15619
    assert REDUCED_TABLE[2][8][3] == 8422
    assert REDUCED_TABLE[3][8][2] == 3134
    assert REDUCED_TABLE[4][8][2] == 531
    assert REDUCED_TABLE[5][8][2] == 39
    _report("1-table-reproduction", started)


def test_criterion_2_euler_number_table():
    started = time.perf_counter()
    assert words.euler_numbers(14) == EULER_TABLE
    assert words.euler_numbers(14, "series") == EULER_TABLE
    assert words.euler_numbers(10, "enumeration") == EULER_TABLE[:10]
    assert EULER_TABLE[9] == 50521 and EULER_TABLE[13] == 199360981
    _report("2-euler-number-table", started)


def test_criterion_3_bijection_certification():
    started = time.perf_counter()
    for n in range(9):
        assert tr.check_fundamental_statistics(n).ok, n
        assert tr.check_fundamental_bijection(n).ok, n
        assert tr.check_fundamental_roundtrip(n).ok, n
    for n in range(1, 9):
        assert tr.check_record_orbit_lemma(n).ok, n
        assert tr.check_valley_position_lemma(n).ok, n
        assert tr.check_biexcedent_alternating(n).ok, n
        assert tr.check_rise_transport(n).ok, n
        assert tr.check_descent_transport(n).ok, n
        assert tr.check_circular_embedding(n).ok, n
        assert tr.check_reverse_rise(n).ok, n
        assert tr.check_complement_count(n).ok, n
        assert tr.check_fixed_point_split(n).ok, n
        for r in range(min(n, 3) + 1):
            assert tr.check_rotation_shift(n, r).ok, (n, r)
    # weighted-multiset transport across the five interpretations
    for n in range(1, 8):
        for a in range(4):
            for b in range(4 - a):
                if a + b <= n:
                    assert poly.check_multiset_transport(n, a, b).ok, (n, a, b)
    _report("3-bijection-certification", started)


def test_criterion_4_worked_example_fidelity():
    started = time.perf_counter()
    p = Permutation((6, 4, 1, 2, 5, 3))
    e = excedance_vector(p)
    assert e == (6, 3, 0, 0, 1, 0)
    assert delta(e) == (5, 2, 0, 0, 0)
    assert delta_prime(e) == (3, 0, 0, 1, 0)
    assert delta_second(e) == (6, 3, 0, 0, 1)
    assert delta(delta(e)) == (4, 1, 0, 0)
    assert delta(delta_prime(e)) == delta_prime(delta(e)) == (2, 0, 0, 0)
    assert delta_prime(delta_prime(e)) == (0, 0, 1, 0)
    assert descent_vector(p) == (4, 0, 3, 3, 0, 0)
    assert delta(descent_vector(p)) == (3, 0, 2, 2, 0)
    assert rise_vector(p) == (6, 1, 3, 0, 0, 0)
    assert tr.fundamental(p) == (4, 2, 5, 6, 1, 3)
    assert tr.reverse(p) == (3, 5, 2, 1, 4, 6)
    assert rise_vector(tr.reverse(p)) == (3, 3, 0, 2, 2, 0)
    s1, s2, bar = tr.excedance_to_rise_steps(p)
    assert s1 == (4, 1, 2, 5, 3, 6)
    assert s2 == (5, 4, 1, 2, 3, 6)
    assert bar == (6, 3, 2, 1, 4, 5)
    # byte-exact rendering through the CLI surface
    import contextlib
    import io

    from eulerian.cli import main, render_eulerian_table

    def cli_lines(*argv):
        buf = io.StringIO()
        with contextlib.redirect_stdout(buf):
            assert main(list(argv)) == 0
        return buf.getvalue().splitlines()

    assert cli_lines("stat", "6 4 1 2 5 3", "--stats", "E,dE,dpE,dsE,D,M,dD") == [
        "E: 6 3 0 0 1 0",
        "dE: 5 2 0 0 0",
        "dpE: 3 0 0 1 0",
        "dsE: 6 3 0 0 1",
        "D: 4 0 3 3 0 0",
        "M: 6 1 3 0 0 0",
        "dD: 3 0 2 2 0",
    ]
    assert cli_lines("map", "fundamental", "6 4 1 2 5 3") == ["4 2 5 6 1 3"]
    assert cli_lines("map", "tilde", "6 4 1 2 5 3") == ["3 5 2 1 4 6"]
    assert cli_lines("map", "bar", "6 4 1 2 5 3", "--verbose") == [
        "step1: 4 1 2 5 3 6",
        "step2: 5 4 1 2 3 6",
        "6 3 2 1 4 5",
    ]
    assert render_eulerian_table("text", 5).splitlines()[-1] == "n=8: 125 171 39 1"
    # the printed size-4 biexcedent/alternating pairing, row by row
    table = {
        (2, 1, 4, 3): (2, 1, 4, 3),
        (3, 4, 1, 2): (3, 1, 4, 2),
        (4, 3, 2, 1): (3, 2, 4, 1),
        (4, 3, 1, 2): (4, 1, 3, 2),
        (3, 4, 2, 1): (4, 2, 3, 1),
    }
    members = {tuple(q): tuple(tr.fundamental(q)) for q in enumerate_class(4, BIEXCEDENT)}
    assert members == table
    _report("4-worked-example-fidelity", started)


def test_criterion_5_series_identities():
    started = time.perf_counter()
    order, budget = 10, 10
    assert ser.check_mixed_egf_exponential_form(order, max_n=budget).ok
    for name, ident in ser.check_mixed_egf_closed_form(order, max_n=budget):
        assert ident.ok, (name, ident.note)
    for name, ident in ser.check_fixed_point_split_relations(order):
        assert ident.ok, name
    for r in range(1, 6):
        assert ser.check_shifted_egf_powers(r, order).ok, r
    assert ser.check_bernoulli_ode(order).ok
    assert ser.check_convolution_recurrence(order).ok
    bundle = ser.exponential_formula_bundle(
        {
            "cycle-indicator": ser.cycle_indicator_weight(list(range(1, order + 1))),
            "biexcedent": ser.biexcedent_weight,
            "matrix-entries": ser.matrix_entry_weight(2, 1, 3),
        },
        order,
        max_n=budget,
    )
    for label, (eq_exp, eq_inv) in bundle.items():
        assert eq_exp.ok, (label, eq_exp.note)
        assert eq_inv.ok, (label, eq_inv.note)
    for abc in ((2, 1, 3), (1, 1, 1), (2, 5, 2)):
        for name, ident in ser.check_permanent_determinant(*abc, order, max_size=order):
            assert ident.ok, (abc, name, ident.note)
    for name, ident in ser.check_staircase_examples(order):
        assert ident.ok, name
    assert ser.check_mixed_permanent(6, max_n=budget).ok
    for r in (1, 2, 3):
        assert ser.check_cycle_weighted_power(r, 6, max_n=budget).ok, r
    # the tree-count equation runs at the stated exhaustive-scan budget
    assert ser.check_tree_equation(7, max_scan=7).ok
    tan, sec = ser.tangent_secant_series(14)
    for m in range(1, 15):
        coeff = (tan if m % 2 else sec).coefficient(m) * factorial(m)
        assert coeff == EULER_TABLE[m - 1], m
    assert ser.check_secant_is_exp_integral_tangent(order).ok
    _report("5-series-identities", started)


def test_criterion_6_finite_identities():
    started = time.perf_counter()
    for m in range(1, 9):
        for n in range(1, 9):
            assert poly.worpitzky(m, n).ok, (m, n)
    for m in range(1, 7):
        for n in range(1, 7):
            for r in range(1, min(m, n) + 1):
                assert poly.worpitzky_generalized(m, n, r).ok, (m, n, r)
    for n in range(1, 9):
        assert poly.frobenius_identity(n).ok, n
    for n in range(1, 8):
        for r in range(1, min(n, 3) + 1):
            assert poly.riordan_stirling_identity(n, r).ok, (n, r)
    for n in range(2, 8):
        for r in (2, 3):
            if r <= n:
                assert poly.newcomb_specialization(n, r).ok, (n, r)
    for n in range(1, 7):
        for r in (1, 2, 3):
            assert poly.q_identity_integer_shift(n, r).ok, (n, r)
        assert poly.q_identity_reciprocal(n).ok, n
    for n in range(1, 8):
        for r in range(min(n, 3) + 1):
            lhs = poly.injection_polynomial(n, r)
            rhs = poly.eulerian_triangle_recurrence(n, r) * Fraction(1, factorial(r))
            assert lhs == rhs, (n, r)
    for n in range(1, 8):
        assert poly.check_symmetry(n).ok, n
        for r in range(1, min(n, 3) + 1):
            assert poly.check_reciprocal_descent_interpretation(n, r).ok, (n, r)
    _report("6-finite-identities", started)


def test_criterion_7_word_calculus():
    started = time.perf_counter()
    for n in range(3, 9):
        assert words.check_derivation_step(n).ok, n
    assert words.c_triangle(8) == words.c_triangle(8, "abelianization")
    for n in range(2, 10):
        assert words.check_valley_expansion(n).ok, n
    for p in range(1, 6):
        assert words.check_tangent_alternating_sum(p).ok, p
        assert words.check_secant_alternating_sum(p).ok, p
    for n in range(2, 8):
        assert words.check_reversal_bridge(n).ok, n
    # the counts carried by the word calculus: alternating words of even size
    # starting at the top value match the next size down
    for p in range(1, 6):
        n = 2 * p
        from eulerian.permutations import FIRST_IS_N, is_in_class

        t_first = sum(
            1 for q in enumerate_class(n, FIRST_IS_N) if is_in_class(q, ALTERNATING)
        )
        assert t_first == class_size(n - 1, ALTERNATING)
    _report("7-word-calculus", started)


def test_criterion_8_cross_method_equality():
    started = time.perf_counter()
    for n in range(1, 9):
        for r in range(1, n + 1):
            base = poly.eulerian_triangle_recurrence(n, r)
            assert poly.eulerian_by_enumeration(n, r) == base, (n, r, "enumeration")
            assert poly.eulerian_shift_recurrence(n, r) == base, (n, r, "shift")
            assert poly.eulerian_explicit(n, r) == base, (n, r, "explicit")
            assert ser.eulerian_from_egf(n, r) == base, (n, r, "egf")
        # the 0-shift column, through the three routes that define it
        base = poly.eulerian_triangle_recurrence(n, 0)
        assert poly.eulerian_by_enumeration(n, 0) == base, (n, 0)
        assert poly.eulerian_shift_recurrence(n, 0) == base, (n, 0)
    _report("8-cross-method-equality", started)
