"""
Statistic-transporting bijections on permutations.

The centrepiece is the fundamental transformation, which converts cycle
structure into word structure: list the elements by lexicographic order of
the pairs (orbit maximum, steps needed to reach that maximum). Orbit maxima
of the source become left-to-right maxima of the image, which is what lets
excedance statistics travel to descent statistics.

The companions are built from it: word reversal, value complementation,
rotation against the full cycle, and three composites that land in the
circular permutations, in the words starting with n, or transport the full
excedance vector onto the rise vector.
"""
from __future__ import annotations

from .permutations import (
    Permutation,
    left_to_right_maxima,
    orbits,
    trusted_perm,
)


def orbit_keys(p: Permutation) -> tuple[tuple[int, int], ...]:
    """For each element k of 1..n, the pair (maximum of k's orbit, least
    number of forward steps from k to that maximum).

    The step count stays below the orbit length, and the n pairs are
    pairwise distinct, so sorting them lexicographically totally orders the
    elements; that order is the fundamental transformation.
    """
    n = len(p)
    keys: list[tuple[int, int]] = [(0, 0)] * n
    for orb in orbits(p):
        size = len(orb)
        im = max(range(size), key=orb.__getitem__)
        m = orb[im]
        for i, k in enumerate(orb):
            keys[k - 1] = (m, (im - i) % size)
    return tuple(keys)


def fundamental(p: Permutation) -> Permutation:
    """Image word lists the elements by lexicographic (orbit maximum,
    distance to maximum) pairs; the last letter is preserved.

    >>> fundamental(Permutation((6, 4, 1, 2, 5, 3)))
    (4, 2, 5, 6, 1, 3)
    """
    keyed = sorted((key, k) for k, key in enumerate(orbit_keys(p), start=1))
    return trusted_perm(k for _, k in keyed)


def fundamental_inverse(tau: Permutation) -> Permutation:
    """Unique preimage under the fundamental transformation.

    Implemented independently of :func:`fundamental`: the segments of the
    word starting at its left-to-right maxima are read as orbits traversed
    backwards from the maximum.
    """
    n = len(tau)
    out = [0] * (n + 1)
    bounds = list(left_to_right_maxima(tau)) + [n + 1]
    for a, b in zip(bounds, bounds[1:]):
        seg = tau[a - 1 : b - 1]
        for prev, cur in zip(seg, seg[1:]):
            out[cur] = prev
        out[seg[0]] = seg[-1]
    return trusted_perm(out[1:])


def reverse(p: Permutation) -> Permutation:
    """Word reversal, sigma(k) -> sigma(n+1-k)."""
    return trusted_perm(p[::-1])


def complement_reverse(p: Permutation) -> Permutation:
    """k -> n+1 - sigma(n+1-k), an involution swapping values and co-values."""
    n = len(p)
    return trusted_perm(n + 1 - v for v in p[::-1])


def word_rotate(p: Permutation, r: int) -> Permutation:
    """Right-compose r times with the cycle sending n to 1, i.e. rotate the
    one-line word left by r."""
    n = len(p)
    if n == 0:
        return p
    r %= n
    return trusted_perm(p[r:] + p[:r])


def excedance_to_rise_steps(p: Permutation) -> tuple[Permutation, Permutation, Permutation]:
    """The three stages (rotation, fundamental, reversal) of the map carrying
    the excedance vector onto the rise vector, entry by entry."""
    s1 = word_rotate(p, 1)
    s2 = fundamental(s1)
    return s1, s2, reverse(s2)


def excedance_to_rise(p: Permutation) -> Permutation:
    """Bijection with excedance_vector(p) == rise_vector(image); it carries
    the fixed-point-free permutations onto the succession-free ones."""
    return excedance_to_rise_steps(p)[2]


def excedance_to_descent(p: Permutation) -> Permutation:
    """From words ending in 1 to words starting with n, transporting the
    1-shifted excedance vector onto the 1-shifted descent vector.

    The image is the fundamental image rotated to start at the value n.
    """
    n = len(p)
    if n == 0 or p[-1] != 1:
        raise ValueError("expects a word ending in 1")
    h = fundamental(p)
    i = h.index(n)  # 0-based position of the value n
    return trusted_perm(h[i:] + h[:i])


def to_circular_steps(p: Permutation) -> tuple[Permutation, Permutation, Permutation]:
    """Stages of the size-raising bijection onto circular permutations."""
    s1 = trusted_perm(tuple(v + 1 for v in p) + (1,))
    s2 = excedance_to_descent(s1)
    return s1, s2, fundamental_inverse(s2)


def to_circular(p: Permutation) -> Permutation:
    """Bijection from all permutations of {1..n-1} onto the circular
    permutations of {1..n}, with excedance_vector(p) == delta of the image's
    excedance vector."""
    return to_circular_steps(p)[2]


# ---------------------------------------------------------------------------
# exhaustive certifications at desk scale
#
# Each check sweeps a full symmetric group (or a stated subclass) and
# confirms both the transported statistics and bijectivity. They return an
# Identity describing the first failure, which the verification suites
# render.

from .permutations import (  # noqa: E402  (grouped after the maps they certify)
    ALTERNATING,
    BIEXCEDENT,
    CIRCULAR,
    DERANGEMENT,
    DEFAULT_PERM_BUDGET,
    FIRST_IS_N,
    LAST_IS_1,
    SUCCESSION_FREE,
    delta,
    descent_plus_certificate,
    descent_vector,
    enumerate_class,
    excedance_vector,
    fixed_point_vector,
    is_in_class,
    positive_count,
    rise_vector,
)
from .polynomials import Identity  # noqa: E402


def _certify(ok: bool, lhs, rhs, note: str = "") -> Identity:
    return Identity(ok, lhs, rhs, note)


def check_fundamental_statistics(n: int, *, max_n: int = DEFAULT_PERM_BUDGET) -> Identity:
    """Excedance vector equals descent-plus-certificate of the image, and the
    lowered vectors coincide, for every permutation of size n."""
    for p in enumerate_class(n, max_n=max_n):
        h = fundamental(p)
        e = excedance_vector(p)
        if e != descent_plus_certificate(h):
            return _certify(False, e, descent_plus_certificate(h), f"at {p}")
        if n >= 1 and delta(e) != delta(descent_vector(h)):
            return _certify(False, delta(e), delta(descent_vector(h)), f"at {p}")
    return _certify(True, n, n)


def check_fundamental_bijection(n: int, *, max_n: int = DEFAULT_PERM_BUDGET) -> Identity:
    """The transformation is bijective, preserves the last letter, and
    restricts to a bijection from circular words onto those starting with n."""
    images = set()
    circ_images = set()
    for p in enumerate_class(n, max_n=max_n):
        h = fundamental(p)
        images.add(h)
        if n >= 1 and h[-1] != p[-1]:
            return _certify(False, h[-1], p[-1], f"last letter at {p}")
        if is_in_class(p, CIRCULAR):
            if not is_in_class(h, FIRST_IS_N):
                return _certify(False, h, p, "circular image must start with n")
            circ_images.add(h)
    total = sum(1 for _ in enumerate_class(n, max_n=max_n))
    if len(images) != total:
        return _certify(False, len(images), total, "not injective")
    first = sum(1 for _ in enumerate_class(n, FIRST_IS_N, max_n=max_n))
    return _certify(len(circ_images) == first, len(circ_images), first)


def check_fundamental_roundtrip(n: int, *, max_n: int = DEFAULT_PERM_BUDGET) -> Identity:
    for p in enumerate_class(n, max_n=max_n):
        if fundamental_inverse(fundamental(p)) != p:
            return _certify(False, fundamental_inverse(fundamental(p)), p, "roundtrip")
        if fundamental(fundamental_inverse(p)) != p:
            return _certify(False, fundamental(fundamental_inverse(p)), p, "roundtrip")
    return _certify(True, n, n)


def check_record_orbit_lemma(n: int, *, max_n: int = DEFAULT_PERM_BUDGET) -> Identity:
    """k is its orbit's maximum iff k is a left-to-right maximum value of the
    image word; k is a fixed point iff k sits last or is followed by another
    left-to-right maximum."""
    from .permutations import left_to_right_maxima, orbits

    for p in enumerate_class(n, max_n=max_n):
        h = fundamental(p)
        maxima_pos = set(left_to_right_maxima(h))
        record_vals = {h[j - 1] for j in maxima_pos}
        orbit_maxima = {max(orb) for orb in orbits(p)}
        if record_vals != orbit_maxima:
            return _certify(False, sorted(record_vals), sorted(orbit_maxima), f"at {p}")
        pos = {v: j for j, v in enumerate(h, start=1)}
        for k in range(1, n + 1):
            j = pos[k]
            # the fixed-point clause applies to record values only: k must be
            # its orbit's maximum before the neighbour condition means anything
            lemma = k in record_vals and (j == n or (j + 1) in maxima_pos)
            if (p(k) == k) != lemma:
                return _certify(False, p(k) == k, lemma, f"fixed-point clause at {p}, k={k}")
    return _certify(True, n, n)


def check_valley_position_lemma(n: int, *, max_n: int = DEFAULT_PERM_BUDGET) -> Identity:
    """k is below both sigma(k) and its preimage iff its position j in the
    image word is a strict local minimum away from the first position."""
    for p in enumerate_class(n, max_n=max_n):
        h = fundamental(p)
        inv = p.inverse()
        for j in range(1, n + 1):
            k = h(j)
            lhs = k < p(k) and k < inv(k)
            if j == 1:
                rhs = False
            elif j <= n - 1:
                rhs = h(j) < h(j - 1) and h(j) < h(j + 1)
            else:
                rhs = h(j) < h(j - 1)
            if lhs != rhs:
                return _certify(False, lhs, rhs, f"at {p}, position {j}")
    return _certify(True, n, n)


def check_biexcedent_alternating(n: int, *, max_n: int = DEFAULT_PERM_BUDGET) -> Identity:
    """Biexcedent words exist only in even size and have even cycles only;
    the fundamental transformation maps them bijectively onto the
    alternating words of that size."""
    from .permutations import orbits

    images = set()
    count = 0
    for p in enumerate_class(n, BIEXCEDENT, max_n=max_n):
        count += 1
        if n % 2:
            return _certify(False, p, None, "odd size must be empty")
        if any(len(orb) % 2 for orb in orbits(p)):
            return _certify(False, p, None, "odd cycle in a biexcedent word")
        h = fundamental(p)
        if not is_in_class(h, ALTERNATING):
            return _certify(False, h, p, "image not alternating")
        images.add(h)
    alternating = sum(1 for _ in enumerate_class(n, ALTERNATING, max_n=max_n)) if n % 2 == 0 else 0
    expect = alternating if n % 2 == 0 else 0
    return _certify(len(images) == expect and count == expect, count, expect)


def check_rise_transport(n: int, *, max_n: int = DEFAULT_PERM_BUDGET) -> Identity:
    """Full-vector transport of excedances onto rises, bijectively; the
    fixed-point-free words land exactly on the succession-free ones."""
    images = set()
    derangement_images = set()
    for p in enumerate_class(n, max_n=max_n):
        bar = excedance_to_rise(p)
        if excedance_vector(p) != rise_vector(bar):
            return _certify(False, excedance_vector(p), rise_vector(bar), f"at {p}")
        images.add(bar)
        if is_in_class(p, DERANGEMENT):
            derangement_images.add(bar)
    total = sum(1 for _ in enumerate_class(n, max_n=max_n))
    if len(images) != total:
        return _certify(False, len(images), total, "not injective")
    succ = set(enumerate_class(n, SUCCESSION_FREE, max_n=max_n))
    return _certify(derangement_images == succ, len(derangement_images), len(succ))


def check_descent_transport(n: int, *, max_n: int = DEFAULT_PERM_BUDGET) -> Identity:
    """On words ending in 1: lowered excedances transport onto lowered
    descents, bijectively onto the words starting with n."""
    images = set()
    for p in enumerate_class(n, LAST_IS_1, max_n=max_n):
        q = excedance_to_descent(p)
        if not is_in_class(q, FIRST_IS_N):
            return _certify(False, q, p, "image must start with n")
        if delta(excedance_vector(p)) != delta(descent_vector(q)):
            return _certify(
                False, delta(excedance_vector(p)), delta(descent_vector(q)), f"at {p}"
            )
        images.add(q)
    first = sum(1 for _ in enumerate_class(n, FIRST_IS_N, max_n=max_n))
    return _certify(len(images) == first, len(images), first)


def check_circular_embedding(n: int, *, max_n: int = DEFAULT_PERM_BUDGET) -> Identity:
    """Size raiser onto circular words: the excedance vector of the source is
    the lowered excedance vector of the image."""
    images = set()
    for p in enumerate_class(n - 1, max_n=max_n):
        q = to_circular(p)
        if not is_in_class(q, CIRCULAR):
            return _certify(False, q, p, "image not circular")
        if excedance_vector(p) != delta(excedance_vector(q)):
            return _certify(False, excedance_vector(p), delta(excedance_vector(q)), f"at {p}")
        images.add(q)
    circ = sum(1 for _ in enumerate_class(n, CIRCULAR, max_n=max_n))
    return _certify(len(images) == circ, len(images), circ)


def check_reverse_rise(n: int, *, max_n: int = DEFAULT_PERM_BUDGET) -> Identity:
    """First rise entry of the reversal is the last letter; the rest are the
    lowered descent entries."""
    for p in enumerate_class(n, max_n=max_n):
        m = rise_vector(reverse(p))
        if m[0] != p[-1]:
            return _certify(False, m[0], p[-1], f"at {p}")
        dd = delta(descent_vector(p))
        if tuple(m[1:]) != tuple(dd):
            return _certify(False, tuple(m[1:]), tuple(dd), f"at {p}")
    return _certify(True, n, n)


def check_rotation_shift(n: int, r: int, *, max_n: int = DEFAULT_PERM_BUDGET) -> Identity:
    """Cropping the excedance vector r times equals lowering it r times after
    rotating the word."""
    from .permutations import StatVector, delta_power

    for p in enumerate_class(n, max_n=max_n):
        lhs = StatVector(excedance_vector(p)[r:])
        rhs = delta_power(excedance_vector(word_rotate(p, r)), r)
        if lhs != rhs:
            return _certify(False, lhs, rhs, f"at {p}, r={r}")
    return _certify(True, n, n)


def check_complement_count(n: int, *, max_n: int = DEFAULT_PERM_BUDGET) -> Identity:
    """Positive excedance entries of the complement-reversal and lowered
    positive entries of the word itself always total n."""
    for p in enumerate_class(n, max_n=max_n):
        total = positive_count(excedance_vector(complement_reverse(p))) + positive_count(
            delta(excedance_vector(p))
        )
        if total != n:
            return _certify(False, total, n, f"at {p}")
    return _certify(True, n, n)


def check_fixed_point_split(n: int, *, max_n: int = DEFAULT_PERM_BUDGET) -> Identity:
    """Positive excedance entries split into fixed points plus positive
    lowered entries."""
    for p in enumerate_class(n, max_n=max_n):
        e = excedance_vector(p)
        if positive_count(e) != positive_count(fixed_point_vector(p)) + positive_count(delta(e)):
            return _certify(False, p, None, "split fails")
    return _certify(True, n, n)


__all__ = [
    "check_biexcedent_alternating",
    "check_circular_embedding",
    "check_complement_count",
    "check_descent_transport",
    "check_fixed_point_split",
    "check_fundamental_bijection",
    "check_fundamental_roundtrip",
    "check_fundamental_statistics",
    "check_record_orbit_lemma",
    "check_reverse_rise",
    "check_rise_transport",
    "check_rotation_shift",
    "check_valley_position_lemma",
    "complement_reverse",
    "excedance_to_descent",
    "excedance_to_rise",
    "excedance_to_rise_steps",
    "fundamental",
    "fundamental_inverse",
    "orbit_keys",
    "reverse",
    "to_circular",
    "to_circular_steps",
    "word_rotate",
]
