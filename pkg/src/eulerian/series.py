"""
Truncated power series in u over exact coefficients, the permanent and
determinant of small matrices over the same coefficient rings, and the
series-level identity checks: closed forms of the excedance generating
functions, the exponential formula for multiplicative weights, the
permanent/determinant inversion, and the tangent/secant expansions.

Coefficients of a series are Fractions or Poly values (possibly nested, with
the inner variable t and an outer auxiliary variable). Arithmetic never
consults indices beyond the truncation order.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Iterator, Sequence

from . import permutations as perms
from .endofunctions import canonical_factorization, count_class_functions, trusted_map
from .permutations import DEFAULT_MAP_SCAN_BUDGET, DEFAULT_PERM_BUDGET, check_budget
from .polynomials import (
    Identity,
    Poly,
    T,
    abar_polynomial,
    eulerian_polynomial,
    eulerian_shift_recurrence,
    eulerian_triangle_recurrence,
    roselle_polynomial,
)

_ZERO = Fraction(0)


class TruncSeries:
    """Power series truncated at a fixed order N: coefficients c0..cN."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable = ()):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = list(coeffs)[: order + 1]
        cs.extend([_ZERO] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    def _check(self, other: "TruncSeries") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def coefficient(self, k: int):
        return self.coeffs[k]

    # -- ring operations, all truncated to the common order ------------------

    def __add__(self, other):
        if isinstance(other, TruncSeries):
            self._check(other)
            return TruncSeries(self.order, (a + b for a, b in zip(self.coeffs, other.coeffs)))
        cs = list(self.coeffs)
        cs[0] = cs[0] + other
        return TruncSeries(self.order, cs)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.order, (-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return TruncSeries(self.order, (c * other for c in self.coeffs))
        self._check(other)
        n = self.order
        out = [_ZERO] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(n - i + 1):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(n, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = TruncSeries(self.order, (1,))
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncSeries)
            and self.order == other.order
            and all(a == b for a, b in zip(self.coeffs, other.coeffs))
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"TruncSeries({self.order}, {list(self.coeffs)!r})"

    # -- calculus -------------------------------------------------------------

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncSeries(order, self.coeffs[: order + 1])

    def shift_up(self) -> "TruncSeries":
        """Multiply by u, keeping the order."""
        return TruncSeries(self.order, (_ZERO,) + self.coeffs[: self.order])

    def derivative(self) -> "TruncSeries":
        if self.order == 0:
            return TruncSeries(0, (_ZERO,))
        return TruncSeries(
            self.order - 1, (k * self.coeffs[k] for k in range(1, self.order + 1))
        )

    def integral(self) -> "TruncSeries":
        """Antiderivative with zero constant term; the order grows by one."""
        out = [_ZERO]
        out.extend(c * Fraction(1, k + 1) for k, c in enumerate(self.coeffs))
        return TruncSeries(self.order + 1, out)

    def reciprocal(self) -> "TruncSeries":
        if not self.coeffs[0] == 1:
            raise ValueError(f"reciprocal needs unit constant term, got {self.coeffs[0]!r}")
        n = self.order
        out = [Fraction(1)] + [_ZERO] * n
        for m in range(1, n + 1):
            acc = _ZERO
            for k in range(1, m + 1):
                a = self.coeffs[k]
                if a:
                    acc = acc + a * out[m - k]
            out[m] = -acc
        return TruncSeries(n, out)

    def exp(self) -> "TruncSeries":
        if self.coeffs[0]:
            raise ValueError(f"exp needs zero constant term, got {self.coeffs[0]!r}")
        n = self.order
        out = [Fraction(1)] + [_ZERO] * n
        for m in range(1, n + 1):
            acc = _ZERO
            for k in range(1, m + 1):
                a = self.coeffs[k]
                if a:
                    acc = acc + (k * a) * out[m - k]
            out[m] = acc * Fraction(1, m)
        return TruncSeries(n, out)

    def log(self) -> "TruncSeries":
        if not self.coeffs[0] == 1:
            raise ValueError(f"log needs unit constant term, got {self.coeffs[0]!r}")
        n = self.order
        out = [_ZERO] * (n + 1)
        for m in range(1, n + 1):
            acc = _ZERO
            for k in range(1, m):
                a = self.coeffs[m - k]
                if a and out[k]:
                    acc = acc + (k * out[k]) * a
            out[m] = self.coeffs[m] - acc * Fraction(1, m)
        return TruncSeries(n, out)

    def map_coefficients(self, fn: Callable) -> "TruncSeries":
        return TruncSeries(self.order, (fn(c) for c in self.coeffs))

    def substitute(self, value) -> "TruncSeries":
        """Evaluate every polynomial coefficient at the given value, a ring
        homomorphism on coefficients."""
        return self.map_coefficients(lambda c: c.eval(value) if isinstance(c, Poly) else c)


def constant_series(value, order: int) -> TruncSeries:
    return TruncSeries(order, (value,))


def exp_of_linear(c, order: int) -> TruncSeries:
    """exp(c * u): coefficient of u^n is c**n / n!."""
    coeffs = []
    cur = Poly((1,)) if isinstance(c, Poly) else Fraction(1)
    for n in range(order + 1):
        coeffs.append(cur * Fraction(1, factorial(n)))
        cur = cur * c
    return TruncSeries(order, coeffs)


def series_from_polynomials(family: Callable[[int], object], order: int) -> TruncSeries:
    """Exponential generating series: coefficient of u^n is family(n) / n!."""
    return TruncSeries(
        order, (family(n) * Fraction(1, factorial(n)) for n in range(order + 1))
    )


def series_identity(lhs: TruncSeries, rhs: TruncSeries, note: str = "") -> Identity:
    """Compare two series up to the smaller order, reporting the first
    mismatching coefficient index."""
    upto = min(lhs.order, rhs.order)
    for k in range(upto + 1):
        if not lhs.coeffs[k] == rhs.coeffs[k]:
            return Identity(False, lhs, rhs, f"first mismatch at u^{k}{'; ' if note else ''}{note}")
    return Identity(True, lhs, rhs, note)


# ---------------------------------------------------------------------------
# matrices over exact coefficient rings


class SquareMatrix:
    """Immutable square matrix with exact (scalar or polynomial) entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        self.rows = tuple(tuple(r) for r in rows)
        n = len(self.rows)
        if any(len(r) != n for r in self.rows):
            raise ValueError("matrix must be square")

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def banded(cls, n: int, above, diagonal, below) -> "SquareMatrix":
        """Constant bands: `above` strictly above the diagonal, `below`
        strictly below."""
        return cls(
            tuple(
                tuple(above if i < j else diagonal if i == j else below for j in range(n))
                for i in range(n)
            )
        )

    @classmethod
    def staircase_inverse(cls, n: int) -> "SquareMatrix":
        """Ones on and above the diagonal, -(i-1) just below it, zeros
        elsewhere; its permanent collapses to (1, 0, 0, ...) while its
        determinant is n!."""
        return cls(
            tuple(
                tuple(
                    1 if i <= j else (-(i - 1) if i - 1 == j else 0)
                    for j in range(1, n + 1)
                )
                for i in range(1, n + 1)
            )
        )


def permanent(mat: SquareMatrix, *, max_n: int = 9):
    """Permanent by subset inclusion-exclusion with Gray-code updates
    (2^n * n ring operations, no division)."""
    n = mat.n
    if n == 0:
        return 1
    check_budget(n, max_n, "permanent expansion")
    rows = mat.rows
    rowsums: list = [0] * n
    total = 0
    prev = 0
    for s in range(1, 1 << n):
        gray = s ^ (s >> 1)
        bit = gray ^ prev
        j = bit.bit_length() - 1
        if gray & bit:
            for i in range(n):
                rowsums[i] = rowsums[i] + rows[i][j]
        else:
            for i in range(n):
                rowsums[i] = rowsums[i] - rows[i][j]
        prev = gray
        prod = 1
        for x in rowsums:
            if not x:
                prod = 0
                break
            prod = prod * x
        if prod:
            total = total + prod if (n - gray.bit_count()) % 2 == 0 else total - prod
    return total


def determinant(mat: SquareMatrix):
    """Determinant by first-available-row expansion, memoized on the set of
    unused columns; exact over any coefficient ring, no division."""
    n = mat.n
    if n == 0:
        return 1
    rows = mat.rows
    memo: dict[int, object] = {}

    def expand(mask: int):
        if mask == 0:
            return 1
        cached = memo.get(mask)
        if cached is not None:
            return cached
        i = n - mask.bit_count()
        total = 0
        sign = 1
        mm = mask
        while mm:
            low = mm & -mm
            j = low.bit_length() - 1
            a = rows[i][j]
            if a:
                sub = expand(mask ^ low)
                total = total + sign * a * sub if sign > 0 else total - a * sub
            sign = -sign
            mm ^= low
        memo[mask] = total
        return total

    return expand((1 << n) - 1)


# ---------------------------------------------------------------------------
# closed forms of the excedance generating functions
#
# Bivariate coefficients follow the nesting convention of the polynomials
# module: inner variable t, outer variable t'.


def _nested_exact_div(c, d: Poly):
    """Divide a (possibly nested) coefficient by a base-level polynomial."""
    if not c:
        return Poly()
    if isinstance(c, Poly):
        if any(isinstance(x, Poly) for x in c.coeffs):
            return Poly(tuple(_nested_exact_div(x, d) for x in c.coeffs))
        return c.exact_div(d)
    raise ArithmeticError(f"scalar {c!r} is not divisible by {d!r}")


_ONE_MINUS_T = Poly((1, -1))


def mixed_egf_closed_form(order: int) -> TruncSeries:
    """(1 - t) / (exp((t - t')u) - t exp((1 - t')u)).

    The denominator has constant term 1 - t; the quotient is computed by
    cancelling that factor from every coefficient exactly, which keeps all
    arithmetic inside the polynomial ring.
    """
    grow = exp_of_linear(Poly((T, -1)), order)  # exp((t - t') u)
    decay = exp_of_linear(Poly((1, -1)), order)  # exp((1 - t') u)
    den = grow - decay * Poly((T,))
    unit = den.map_coefficients(lambda c: _nested_exact_div(c, _ONE_MINUS_T))
    return unit.reciprocal()


def classical_egf_closed_form(order: int) -> TruncSeries:
    """(1 - t) / (-t + exp((t - 1)u)), the EGF of the classical polynomials."""
    den = exp_of_linear(T - 1, order) - constant_series(T, order)
    unit = den.map_coefficients(lambda c: _nested_exact_div(c, _ONE_MINUS_T))
    return unit.reciprocal()


def zero_shift_egf_closed_form(order: int) -> TruncSeries:
    """(1 - t) / (1 - t exp((1 - t)u)), the EGF of the 0-shift polynomials."""
    den = constant_series(Fraction(1), order) - exp_of_linear(1 - T, order) * T
    unit = den.map_coefficients(lambda c: _nested_exact_div(c, _ONE_MINUS_T))
    return unit.reciprocal()


def roselle_egf_closed_form(order: int) -> TruncSeries:
    """(1 - t) / (exp(t u) - t exp(u)), the EGF of the derangement-excedance
    polynomials."""
    den = exp_of_linear(T, order) - exp_of_linear(Fraction(1), order) * T
    unit = den.map_coefficients(lambda c: _nested_exact_div(c, _ONE_MINUS_T))
    return unit.reciprocal()


def specialize_outer(series: TruncSeries, value) -> TruncSeries:
    """Substitute the outer auxiliary variable of bivariate coefficients."""
    return series.substitute(value)


def eulerian_from_egf(n: int, r: int) -> Poly:
    """Shifted Eulerian polynomial extracted from the r-th power of the
    closed-form classical EGF (an enumeration-free and recurrence-free
    route)."""
    if r < 1:
        raise ValueError("EGF extraction needs r >= 1")
    if r > n:
        return Poly((factorial(n),))
    m = n - r + 1
    powered = classical_egf_closed_form(m) ** r
    coeff = powered.coefficient(m) * factorial(m) * factorial(r - 1)
    if not isinstance(coeff, Poly):
        coeff = Poly((coeff,))
    return Poly(tuple(Fraction(c) for c in coeff.coeffs))


# ---------------------------------------------------------------------------
# identity checks


def check_mixed_egf_exponential_form(
    order: int, *, max_n: int = DEFAULT_PERM_BUDGET
) -> Identity:
    """The joint fixed-point/excedance EGF (by enumeration) equals
    exp(u t' + sum_{n>=2} u^n/n! t A_{n-1}(t))."""
    upto = min(order, max_n)
    lhs = series_from_polynomials(lambda n: abar_polynomial(n), upto)
    arg = [Poly(), Poly((0, 1))]
    arg.extend(
        Poly((T * eulerian_polynomial(n - 1),)) * Fraction(1, factorial(n))
        for n in range(2, upto + 1)
    )
    rhs = TruncSeries(upto, arg).exp()
    return series_identity(lhs, rhs)


def check_mixed_egf_closed_form(
    order: int, *, max_n: int = DEFAULT_PERM_BUDGET
) -> list[tuple[str, Identity]]:
    """The bivariate closed form against the enumeration EGF, and its three
    specializations against the 0-shift, classical, and derangement
    polynomial families."""
    closed = mixed_egf_closed_form(order)
    upto = min(order, max_n)
    out = [
        (
            "mixed-egf-closed-form",
            series_identity(
                series_from_polynomials(lambda n: abar_polynomial(n), upto),
                closed.truncate(upto),
            ),
        ),
        (
            "specialize-zero-shift",
            series_identity(
                specialize_outer(closed, T),
                series_from_polynomials(lambda n: eulerian_shift_recurrence(n, 0), order),
            ),
        ),
        (
            "specialize-classical",
            series_identity(
                specialize_outer(closed, 1),
                series_from_polynomials(eulerian_polynomial, order),
            ),
        ),
        (
            "specialize-derangement",
            series_identity(
                specialize_outer(closed, 0).truncate(upto),
                series_from_polynomials(lambda n: roselle_polynomial(n, max_n=max_n), upto),
            ),
        ),
        (
            "closed-form-zero-shift-direct",
            series_identity(specialize_outer(closed, T), zero_shift_egf_closed_form(order)),
        ),
        (
            "closed-form-classical-direct",
            series_identity(specialize_outer(closed, 1), classical_egf_closed_form(order)),
        ),
        (
            "closed-form-derangement-direct",
            series_identity(specialize_outer(closed, 0), roselle_egf_closed_form(order)),
        ),
    ]
    return out


def check_fixed_point_split_relations(order: int) -> list[tuple[str, Identity]]:
    """Algebraic relations between the t' = t and t' = 1 specializations:
    the 0-shift EGF is 1 + t (classical - 1), and also exp(ut - u) times the
    classical EGF."""
    closed = mixed_egf_closed_form(order)
    both_t = specialize_outer(closed, T)
    at_one = specialize_outer(closed, 1)
    rel1 = series_identity(both_t, (at_one - 1) * T + 1)
    rel2 = series_identity(both_t, exp_of_linear(T - 1, order) * at_one)
    return [("zero-shift-affine-relation", rel1), ("zero-shift-exp-relation", rel2)]


def check_shifted_egf_powers(r: int, order: int) -> Identity:
    """The shifted EGF is (r-1)! times the r-th power of the classical one."""
    if r < 1:
        raise ValueError("need r >= 1")
    lhs = series_from_polynomials(lambda m: eulerian_triangle_recurrence(m + r - 1, r), order)
    rhs = series_from_polynomials(eulerian_polynomial, order) ** r * factorial(r - 1)
    return series_identity(lhs, rhs)


def check_bernoulli_ode(order: int) -> Identity:
    """The classical EGF A satisfies dA/du = A (1 + t(A - 1))."""
    a = series_from_polynomials(eulerian_polynomial, order)
    lhs = a.derivative()
    rhs = (a * ((a - 1) * T + 1)).truncate(order - 1)
    return series_identity(lhs, rhs)


def check_convolution_recurrence(n_max: int) -> Identity:
    """Binomial convolution: A_{n+1} = A_n + t sum_{m<n} C(n,m) A_m A_{n-m}."""
    from math import comb

    fam = [eulerian_polynomial(n) for n in range(n_max + 1)]
    for n in range(n_max):
        rhs = fam[n] + T * sum(
            (comb(n, m) * fam[m] * fam[n - m] for m in range(n)), Poly()
        )
        if fam[n + 1] != rhs:
            return Identity(False, fam[n + 1], rhs, f"fails at size {n + 1}")
    return Identity(True, fam[n_max], fam[n_max])


# -- the exponential formula ------------------------------------------------


def _circular_words(n: int) -> Iterator[tuple[int, ...]]:
    if n == 1:
        yield (1,)
        return
    for arr in itertools.permutations(range(1, n)):
        cyc = (n,) + arr
        word = [0] * n
        for i in range(n):
            word[cyc[i] - 1] = cyc[(i + 1) % n]
        yield tuple(word)


def cycle_indicator_weight(xs: Sequence) -> Callable[[tuple], object]:
    """Weight of a connected factor of size m: the m-th of the given values;
    the product over factors is the cycle-type monomial evaluated there."""
    def weight(word: tuple) -> object:
        return xs[len(word) - 1]

    return weight


def biexcedent_weight(word: tuple) -> int:
    """Indicator of the biexcedent condition on a connected factor; the
    product over factors is the indicator of the whole permutation."""
    return 1 if perms.is_in_class(word, perms.BIEXCEDENT) else 0


def matrix_entry_weight(a, b, c) -> Callable[[tuple], object]:
    """Product of banded-matrix entries along the graph of the factor:
    `a` for strict excedances, `b` for fixed points, `c` below."""
    def weight(word: tuple) -> object:
        val = 1
        for i, v in enumerate(word, start=1):
            val = val * (a if v > i else b if v == i else c)
        return val

    return weight


def fixed_point_split_weight(word: tuple) -> Poly:
    """The outer variable marks fixed points, the inner one the strict
    excedances of the factor."""
    if len(word) == 1:
        return Poly((0, 1))
    exc = sum(1 for i, v in enumerate(word, start=1) if v > i)
    return Poly((T**exc,))


def exponential_formula_bundle(
    weights: dict[str, Callable[[Sequence[int]], object]],
    order: int,
    *,
    max_n: int = DEFAULT_PERM_BUDGET,
) -> dict[str, tuple[Identity, Identity]]:
    """For several multiplicative weights at once: the weighted EGF over all
    permutations equals exp of the weighted EGF over the connected (circular)
    ones, and its reciprocal is the signed weighted EGF with alternating u.

    Left sides are computed by exhaustive enumeration through the canonical
    factorization (shared across the weights, which is why they are bundled):
    the weight of a permutation is the product of the weights of its
    connected factors.
    """
    check_budget(order, max_n, "permutation enumeration")
    names = list(weights)
    fns = [weights[name] for name in names]
    plain = {name: [1] + [0] * order for name in names}
    signed = {name: [1] + [0] * order for name in names}
    conn = {name: [0] * (order + 1) for name in names}
    for n in range(1, order + 1):
        p_acc = [0] * len(names)
        s_acc = [0] * len(names)
        for word in itertools.permutations(range(1, n + 1)):
            factors = canonical_factorization(trusted_map(word))
            eps_odd = (len(factors) + n) % 2
            for i, fn in enumerate(fns):
                val = 1
                for g, _dom in factors:
                    val = val * fn(g)
                    if not val:
                        break
                if not val:
                    continue
                p_acc[i] = p_acc[i] + val
                s_acc[i] = s_acc[i] - val if eps_odd else s_acc[i] + val
        for i, name in enumerate(names):
            plain[name][n], signed[name][n] = p_acc[i], s_acc[i]
        for w in _circular_words(n):
            for i, name in enumerate(names):
                conn[name][n] = conn[name][n] + fns[i](w)
    out = {}
    for name in names:
        egf_all = TruncSeries(
            order, (c * Fraction(1, factorial(n)) for n, c in enumerate(plain[name]))
        )
        egf_conn = TruncSeries(
            order, (c * Fraction(1, factorial(n)) for n, c in enumerate(conn[name]))
        )
        egf_signed = TruncSeries(
            order,
            (c * Fraction((-1) ** n, factorial(n)) for n, c in enumerate(signed[name])),
        )
        eq_exp = series_identity(egf_all, egf_conn.exp(), "exponential form")
        eq_inv = series_identity(egf_all.reciprocal(), egf_signed, "signed reciprocal")
        out[name] = (eq_exp, eq_inv)
    return out


def check_exponential_formula(
    factor_weight: Callable[[Sequence[int]], object],
    order: int,
    *,
    max_n: int = DEFAULT_PERM_BUDGET,
) -> tuple[Identity, Identity]:
    """Single-weight form of :func:`exponential_formula_bundle`."""
    return exponential_formula_bundle({"weight": factor_weight}, order, max_n=max_n)["weight"]


def check_cycle_weighted_power(
    r: int, order: int, *, max_n: int = DEFAULT_PERM_BUDGET
) -> Identity:
    """With the fixed-point-split weight boosted by r**cycles (integer r),
    the weighted EGF is the r-th power of the mixed closed form."""
    check_budget(order, max_n, "permutation enumeration")
    coeffs: list = [Fraction(1)]
    for n in range(1, order + 1):
        acc: object = Poly()
        for word in itertools.permutations(range(1, n + 1)):
            factors = canonical_factorization(trusted_map(word))
            val: object = r ** len(factors)
            for g, _dom in factors:
                val = val * fixed_point_split_weight(tuple(g))
            acc = acc + val
        coeffs.append(acc * Fraction(1, factorial(n)))
    lhs = TruncSeries(order, coeffs)
    rhs = mixed_egf_closed_form(order) ** r
    return series_identity(lhs, rhs)


def check_tree_equation(order: int, *, max_scan: int = DEFAULT_MAP_SCAN_BUDGET) -> Identity:
    """w = exp(u w) for the EGF w of the maps whose n-th iterate equals the
    (n-1)-st, with counts from the exhaustive scan."""
    w = series_from_polynomials(
        lambda n: count_class_functions(n, "ultimately_idempotent", max_n=max_scan), order
    )
    return series_identity(w, w.shift_up().exp())


# -- permanents and determinants ---------------------------------------------


def check_permanent_determinant(
    a, b, c, order: int, *, max_size: int = 9
) -> list[tuple[str, Identity]]:
    """For a banded matrix: the reciprocal of the permanent EGF is the signed
    determinant EGF; the determinant has its two-case closed form; and the
    reciprocal matches the two-case exponential closed form."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    pers = [1] + [permanent(SquareMatrix.banded(n, a, b, c), max_n=max_size) for n in range(1, order + 1)]
    dets = [1] + [determinant(SquareMatrix.banded(n, a, b, c)) for n in range(1, order + 1)]
    per_egf = TruncSeries(order, (v * Fraction(1, factorial(n)) for n, v in enumerate(pers)))
    det_egf = TruncSeries(
        order, (v * Fraction((-1) ** n, factorial(n)) for n, v in enumerate(dets))
    )
    out = [("permanent-determinant-inversion", series_identity(per_egf.reciprocal(), det_egf))]

    closed_dets = [1]
    for n in range(1, order + 1):
        if c != a:
            closed_dets.append((c * (b - a) ** n - a * (b - c) ** n) / (c - a))
        else:
            closed_dets.append((b - a) ** (n - 1) * (b + (n - 1) * a))
    det_ok = closed_dets == dets
    out.append(
        ("determinant-closed-form", Identity(det_ok, dets, closed_dets))
    )

    if c != a:
        closed = (exp_of_linear(a - b, order) * c - exp_of_linear(c - b, order) * a) * (
            Fraction(1) / (c - a)
        )
    elif a != b:
        lin = constant_series(Fraction(1), order) - TruncSeries(order, (0, a))
        closed = lin * exp_of_linear(a - b, order)
    else:
        closed = None
    if closed is not None:
        out.append(
            ("reciprocal-exponential-closed-form", series_identity(per_egf.reciprocal(), closed))
        )
    return out


def check_staircase_examples(order: int) -> list[tuple[str, Identity]]:
    """Two non-banded matrices for which the inversion identity still holds:
    the staircase matrix with permanent (1, 0, 0, ...) and determinant n!,
    and any matrix with an all-zero first column."""
    out = []
    pers = [1] + [permanent(SquareMatrix.staircase_inverse(n), max_n=order) for n in range(1, order + 1)]
    dets = [1] + [determinant(SquareMatrix.staircase_inverse(n)) for n in range(1, order + 1)]
    shape_ok = pers == [1, 1] + [0] * (order - 1) and dets == [factorial(n) for n in range(order + 1)]
    out.append(("staircase-values", Identity(shape_ok, pers, dets)))
    per_egf = TruncSeries(order, (v * Fraction(1, factorial(n)) for n, v in enumerate(pers)))
    det_egf = TruncSeries(order, (v * Fraction((-1) ** n, factorial(n)) for n, v in enumerate(dets)))
    geo = TruncSeries(order, ((-1) ** n for n in range(order + 1)))
    out.append(("staircase-inversion", series_identity(per_egf.reciprocal(), det_egf)))
    out.append(("staircase-geometric", series_identity(det_egf, geo)))

    zero_first = SquareMatrix(
        tuple(tuple(0 if j == 0 else i + j for j in range(4)) for i in range(4))
    )
    triv = permanent(zero_first) == 0 and determinant(zero_first) == 0
    out.append(("zero-column-degenerate", Identity(triv, 0, 0)))
    return out


def check_mixed_permanent(n_max: int, *, max_n: int = DEFAULT_PERM_BUDGET) -> Identity:
    """The permanent of the banded matrix with symbolic bands (t above, t' on
    the diagonal, 1 below) is the joint fixed-point/excedance polynomial."""
    above = Poly((T,))
    diag = Poly((0, 1))
    for n in range(1, n_max + 1):
        per = permanent(SquareMatrix.banded(n, above, diag, 1))
        target = abar_polynomial(n, max_n=max_n)
        if not per == target:
            return Identity(False, per, target, f"fails at size {n}")
    return Identity(True, n_max, n_max, "permanents match the joint polynomials")


# -- tangent and secant -------------------------------------------------------


def tangent_secant_series(order: int) -> tuple[TruncSeries, TruncSeries]:
    """tan u and 1/cos u over exact rationals.

    Both come from the closed-form EGFs evaluated at t = -1: the classical
    one contributes the odd part (tangent) and the derangement one the even
    part (secant), with the alternating sign bookkeeping applied to real
    coefficients rather than through complex arguments.
    """
    f = classical_egf_closed_form(order).substitute(-1)
    g = roselle_egf_closed_form(order).substitute(-1)
    tan_coeffs = [_ZERO] * (order + 1)
    sec_coeffs = [_ZERO] * (order + 1)
    for k in range(order + 1):
        if k % 2 == 1:
            p = (k + 1) // 2
            tan_coeffs[k] = Fraction((-1) ** (p - 1)) * f.coeffs[k]
            if g.coeffs[k]:
                raise ArithmeticError(f"odd secant coefficient at u^{k}: {g.coeffs[k]}")
        else:
            p = k // 2
            sec_coeffs[k] = Fraction((-1) ** p) * g.coeffs[k]
            if k >= 2 and f.coeffs[k]:
                raise ArithmeticError(f"even tangent source at u^{k}: {f.coeffs[k]}")
    sec_coeffs[0] = Fraction(1)
    return TruncSeries(order, tan_coeffs), TruncSeries(order, sec_coeffs)


def check_secant_is_exp_integral_tangent(order: int) -> Identity:
    """1 / cos u = exp(integral of tan u)."""
    tan, sec = tangent_secant_series(order)
    return series_identity(tan.integral().exp().truncate(order), sec)


__all__ = [
    "SquareMatrix",
    "TruncSeries",
    "biexcedent_weight",
    "check_bernoulli_ode",
    "check_convolution_recurrence",
    "check_cycle_weighted_power",
    "check_exponential_formula",
    "check_fixed_point_split_relations",
    "check_mixed_egf_closed_form",
    "check_mixed_egf_exponential_form",
    "check_mixed_permanent",
    "check_permanent_determinant",
    "check_secant_is_exp_integral_tangent",
    "check_shifted_egf_powers",
    "check_staircase_examples",
    "check_tree_equation",
    "classical_egf_closed_form",
    "constant_series",
    "cycle_indicator_weight",
    "determinant",
    "eulerian_from_egf",
    "exp_of_linear",
    "exponential_formula_bundle",
    "fixed_point_split_weight",
    "matrix_entry_weight",
    "mixed_egf_closed_form",
    "permanent",
    "roselle_egf_closed_form",
    "series_from_polynomials",
    "series_identity",
    "specialize_outer",
    "tangent_secant_series",
    "zero_shift_egf_closed_form",
]
