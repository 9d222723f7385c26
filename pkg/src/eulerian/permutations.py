"""
Permutations of {1..n} in one-line notation, their excedance / descent / rise
statistic vectors, and the shift-and-truncate operators acting on them.

Conventions
-----------
* A permutation is stored as the word (sigma(1), ..., sigma(n)); the empty
  word is the unique permutation of size 0.
* Every position or value reported by this module is 1-based.
* Statistic vectors live in N^p: each entry is the positive part
  (x)+ = max(0, x) of an integer expression, clamped on construction.
* Descent and rise vectors hard-code the boundary values
  sigma(0) = sigma^(-1)(0) = sigma(n+1) = 0.

All public types are immutable values, and every function is pure, so
everything here is safe to share across threads.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

DEFAULT_PERM_BUDGET = 10
DEFAULT_MAP_SCAN_BUDGET = 7


class BudgetError(ValueError):
    """An exhaustive scan would exceed its configured budget."""


def check_budget(n: int, max_n: int, what: str) -> None:
    if n > max_n:
        raise BudgetError(f"{what} at n={n} exceeds the configured limit max_n={max_n}")


class Permutation(tuple):
    """One-line word of a permutation of {1..n}.

    Behaves as a tuple of values; ``p(k)`` is sigma(k) for 1-based k.

    >>> p = Permutation((6, 4, 1, 2, 5, 3))
    >>> p(1), p(6)
    (6, 3)
    """

    def __new__(cls, word: Iterable[int] = ()):
        word = tuple(word)
        n = len(word)
        if sorted(word) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {word!r}")
        return tuple.__new__(cls, word)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, k: int) -> int:
        return self[k - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for pos, val in enumerate(self, start=1):
            inv[val - 1] = pos
        return trusted_perm(inv)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return trusted_perm(range(1, n + 1))


def trusted_perm(word: Iterable[int]) -> Permutation:
    """Wrap an already-validated word without re-checking bijectivity."""
    return tuple.__new__(Permutation, tuple(word))


class StatVector(tuple):
    """Finite vector of nonnegative integers; entries are clamped at zero."""

    def __new__(cls, entries: Iterable[int] = ()):
        return tuple.__new__(cls, tuple(x if x > 0 else 0 for x in entries))


# ---------------------------------------------------------------------------
# operators on statistic vectors


def delta(v) -> StatVector:
    """Drop the last entry and lower every remaining one by 1, clamped."""
    if not v:
        raise ValueError("delta on empty vector")
    return StatVector(x - 1 for x in v[:-1])


def delta_prime(v) -> StatVector:
    """Drop the first entry."""
    if not v:
        raise ValueError("delta_prime on empty vector")
    return StatVector(v[1:])


def delta_second(v) -> StatVector:
    """Drop the last entry."""
    if not v:
        raise ValueError("delta_second on empty vector")
    return StatVector(v[:-1])


def lambda_op(v) -> StatVector:
    """Lower every entry by 1, clamped; keeps the length."""
    return StatVector(x - 1 for x in v)


def delta_power(v, r: int) -> StatVector:
    """r-fold delta in one pass: first len(v)-r entries, lowered by r."""
    if r == 0:
        return StatVector(v)
    if r > len(v):
        raise ValueError("delta on empty vector")
    return StatVector(x - r for x in v[: len(v) - r])


def apply_operators(v, ops: str) -> StatVector:
    """Apply a word over {'d', 'p', 's', 'l'} (delta, delta', delta'', lambda),
    leftmost letter applied last, matching operator composition order."""
    table = {"d": delta, "p": delta_prime, "s": delta_second, "l": lambda_op}
    out = StatVector(v)
    for ch in reversed(ops):
        out = table[ch](out)
    return out


def positive_count(v) -> int:
    """Number of strictly positive entries."""
    return sum(1 for x in v if x > 0)


# ---------------------------------------------------------------------------
# statistic vectors of a permutation


def excedance_vector(p: Permutation) -> StatVector:
    """(sigma(k) - (k-1))+ for k = 1..n.

    Entry k equals 1 exactly when k is a fixed point, and exceeds 1 exactly
    when sigma(k) > k.

    >>> excedance_vector(Permutation((6, 4, 1, 2, 5, 3)))
    (6, 3, 0, 0, 1, 0)
    """
    return StatVector(v - k for k, v in enumerate(p))


def descent_vector(p: Permutation) -> StatVector:
    """Entry k is (sigma(j-1) - (k-1))+ where j is the position of value k.

    Entries are 0 or >= 2, and the last entry is always 0.
    """
    n = len(p)
    pos = [0] * (n + 1)
    for j, v in enumerate(p, start=1):
        pos[v] = j
    out = []
    for k in range(1, n + 1):
        j = pos[k]
        prev = p[j - 2] if j >= 2 else 0
        out.append(prev - (k - 1))
    return StatVector(out)


def rise_vector(p: Permutation) -> StatVector:
    """Entry k is (sigma(1 + j) - (k-1))+ where j is the position of k-1."""
    n = len(p)
    pos = [0] * (n + 1)
    for j, v in enumerate(p, start=1):
        pos[v] = j
    out = []
    for k in range(1, n + 1):
        j = pos[k - 1] if k >= 2 else 0
        nxt = p[j] if j < n else 0
        out.append(nxt - (k - 1))
    return StatVector(out)


def fixed_point_vector(p: Permutation) -> StatVector:
    """0/1 indicator of fixed points, entry k for position k."""
    return StatVector(1 if v == k else 0 for k, v in enumerate(p, start=1))


def left_to_right_maxima(p) -> tuple[int, ...]:
    """Positions whose value exceeds every earlier value (position 1 always)."""
    out = []
    best = 0
    for j, v in enumerate(p, start=1):
        if v > best:
            out.append(j)
            best = v
    return tuple(out)


def ltr_maximum_count(p) -> int:
    return len(left_to_right_maxima(p))


def dprime_vector(p: Permutation) -> StatVector:
    """0/1 certificate whose entrywise sum with the descent vector records both
    descents and runs of left-to-right maxima.

    Entry j is 1 when the value j is a left-to-right maximum of the word and
    either sits at the last position or is immediately followed by another
    left-to-right maximum.
    """
    n = len(p)
    maxima = set(left_to_right_maxima(p))
    pos = [0] * (n + 1)
    for j, v in enumerate(p, start=1):
        pos[v] = j
    out = []
    for val in range(1, n + 1):
        j = pos[val]
        if j not in maxima:
            out.append(0)
        elif j == n:
            # a value below n can never be a left-to-right maximum at the last
            # position, since n would have to occur before it
            assert val == n
            out.append(1)
        else:
            out.append(1 if (j + 1) in maxima else 0)
    return StatVector(out)


def descent_plus_certificate(p: Permutation) -> StatVector:
    return StatVector(a + b for a, b in zip(descent_vector(p), dprime_vector(p)))


# ---------------------------------------------------------------------------
# cycle structure


def orbits(p) -> tuple[tuple[int, ...], ...]:
    """Orbit partition under iteration; each orbit is listed in traversal
    order from its smallest element, orbits ordered by smallest element."""
    n = len(p)
    seen = [False] * (n + 1)
    out = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        orb = []
        k = start
        while not seen[k]:
            seen[k] = True
            orb.append(k)
            k = p[k - 1]
        out.append(tuple(orb))
    return tuple(out)


def cycle_count(p) -> int:
    return len(orbits(p))


def signature(p) -> int:
    """(-1) ** (number of orbits + n)."""
    return -1 if (cycle_count(p) + len(p)) % 2 else 1


# ---------------------------------------------------------------------------
# permutation classes


@dataclass(frozen=True)
class ClassTag:
    kind: str
    r: int | None = None


ALL = ClassTag("all")
CIRCULAR = ClassTag("circular")
SUCCESSION_FREE = ClassTag("succession_free")
DERANGEMENT = ClassTag("derangement")
ALTERNATING = ClassTag("alternating")
BIEXCEDENT = ClassTag("biexcedent")
FIRST_IS_N = ClassTag("first_is_n")
LAST_IS_1 = ClassTag("last_is_1")


def r_tail_ordered(r: int) -> ClassTag:
    """Words in which the r largest values occur in increasing order."""
    return ClassTag("r_tail_ordered", r)


def _is_circular(word) -> bool:
    n = len(word)
    if n == 0:
        return False
    cnt = 1
    k = word[0]
    while k != 1:
        k = word[k - 1]
        cnt += 1
    return cnt == n


def _is_succession_free(word) -> bool:
    n = len(word)
    if n == 0:
        return True
    if word[0] == 1:
        return False
    return all(word[j + 1] != word[j] + 1 for j in range(n - 1))


def _is_derangement(word) -> bool:
    return all(v != k for k, v in enumerate(word, start=1))


def _is_alternating(word) -> bool:
    # down-up: every even position 2j <= n-1 is below both neighbours, and
    # when n is even the final letter is below its left neighbour
    n = len(word)
    for e in range(2, n, 2):
        v = word[e - 1]
        if v > word[e - 2] or v > word[e]:
            return False
    if n >= 2 and n % 2 == 0 and word[n - 1] > word[n - 2]:
        return False
    return True


def _is_biexcedent(word) -> bool:
    n = len(word)
    pos = [0] * (n + 1)
    for j, v in enumerate(word, start=1):
        pos[v] = j
    for j in range(1, n + 1):
        v, w = word[j - 1], pos[j]
        if not ((j < v and j < w) or (j > v and j > w)):
            return False
    return True


def _is_first_is_n(word) -> bool:
    return len(word) > 0 and word[0] == len(word)


def _is_last_is_1(word) -> bool:
    return len(word) > 0 and word[-1] == 1


def _is_r_tail_ordered(word, r: int) -> bool:
    n = len(word)
    pos = [0] * (n + 1)
    for j, v in enumerate(word, start=1):
        pos[v] = j
    return all(pos[k] < pos[k + 1] for k in range(n - r + 1, n))


_PREDICATES: dict[str, Callable] = {
    "all": lambda word: True,
    "circular": _is_circular,
    "succession_free": _is_succession_free,
    "derangement": _is_derangement,
    "alternating": _is_alternating,
    "biexcedent": _is_biexcedent,
    "first_is_n": _is_first_is_n,
    "last_is_1": _is_last_is_1,
}


def is_in_class(p, tag: ClassTag) -> bool:
    word = tuple(p)
    if tag.kind == "r_tail_ordered":
        if tag.r is None or not 1 <= tag.r <= len(word):
            raise ValueError(f"r_tail_ordered needs 1 <= r <= n, got r={tag.r}, n={len(word)}")
        return _is_r_tail_ordered(word, tag.r)
    return _PREDICATES[tag.kind](word)


def enumerate_class(
    n: int, tag: ClassTag = ALL, *, max_n: int = DEFAULT_PERM_BUDGET
) -> Iterator[Permutation]:
    """Yield every member of the class exactly once, in lexicographic word
    order. The scan is exhaustive, hence the budget."""
    check_budget(n, max_n, "permutation enumeration")
    if tag.kind == "r_tail_ordered" and (tag.r is None or not 1 <= tag.r <= n):
        raise ValueError(f"r_tail_ordered needs 1 <= r <= n, got r={tag.r}, n={n}")
    if n >= 1 and tag.kind == "first_is_n":
        # all members share the first letter, so lex order is lex on the rest
        for rest in itertools.permutations(range(1, n)):
            yield trusted_perm((n,) + rest)
        return
    if n >= 1 and tag.kind == "last_is_1":
        for rest in itertools.permutations(range(2, n + 1)):
            yield trusted_perm(rest + (1,))
        return
    if tag.kind == "r_tail_ordered":
        pred = lambda word: _is_r_tail_ordered(word, tag.r)  # noqa: E731
    else:
        pred = _PREDICATES[tag.kind]
    for word in itertools.permutations(range(1, n + 1)):
        if pred(word):
            yield trusted_perm(word)


def class_size(n: int, tag: ClassTag, *, max_n: int = DEFAULT_PERM_BUDGET) -> int:
    return sum(1 for _ in enumerate_class(n, tag, max_n=max_n))


def statistic_multiset(
    n: int,
    tag: ClassTag,
    stat: Callable[[Permutation], StatVector],
    *,
    max_n: int = DEFAULT_PERM_BUDGET,
) -> tuple:
    """Sorted tuple of statistic vectors over a class: a canonical multiset
    encoding, so two multisets are equal iff these tuples are."""
    return tuple(sorted(stat(p) for p in enumerate_class(n, tag, max_n=max_n)))


def zeta(n: int) -> Permutation:
    """The cycle (2, 3, ..., n, 1) sending n to 1 and k to k+1 below n."""
    return trusted_perm(tuple(range(2, n + 1)) + (1,)) if n else trusted_perm(())


__all__ = [
    "ALL",
    "ALTERNATING",
    "BIEXCEDENT",
    "BudgetError",
    "CIRCULAR",
    "ClassTag",
    "DEFAULT_MAP_SCAN_BUDGET",
    "DEFAULT_PERM_BUDGET",
    "DERANGEMENT",
    "FIRST_IS_N",
    "LAST_IS_1",
    "Permutation",
    "StatVector",
    "SUCCESSION_FREE",
    "apply_operators",
    "check_budget",
    "class_size",
    "cycle_count",
    "delta",
    "delta_power",
    "delta_prime",
    "delta_second",
    "descent_plus_certificate",
    "descent_vector",
    "dprime_vector",
    "enumerate_class",
    "excedance_vector",
    "fixed_point_vector",
    "is_in_class",
    "lambda_op",
    "left_to_right_maxima",
    "ltr_maximum_count",
    "orbits",
    "positive_count",
    "r_tail_ordered",
    "rise_vector",
    "signature",
    "statistic_multiset",
    "trusted_perm",
    "zeta",
]
