"""
Self-maps of {1..n}: connected-component structure, the canonical
factorization into connected factors on relabelled domains, and exhaustive
counts of tree-like map classes.

A map f is stored as its image word (f(1), ..., f(n)). Two points are
equivalent when some forward iterates of f meet; the classes of that
equivalence are the sub-domains of f, and f is connected when there is a
single class. For a permutation the sub-domains are exactly the orbits.
"""
from __future__ import annotations

import itertools
from typing import Iterable, Iterator

from .permutations import DEFAULT_MAP_SCAN_BUDGET, check_budget


class FunctionMap(tuple):
    """Image word of a map {1..n} -> {1..n}; no bijectivity required."""

    def __new__(cls, image: Iterable[int] = ()):
        image = tuple(image)
        n = len(image)
        for v in image:
            if not 1 <= v <= n:
                raise ValueError(f"image value {v} outside 1..{n}: {image!r}")
        return tuple.__new__(cls, image)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, k: int) -> int:
        return self[k - 1]


def trusted_map(image: Iterable[int]) -> FunctionMap:
    return tuple.__new__(FunctionMap, tuple(image))


def subdomains(f) -> tuple[tuple[int, ...], ...]:
    """Classes of the coarsest equivalence merging each i with f(i), i.e. the
    weakly connected pieces of the functional graph. Each class is returned
    sorted, classes ordered by smallest element."""
    n = len(f)
    comp = [0] * (n + 1)
    groups: list[list[int]] = []
    for start in range(1, n + 1):
        if comp[start]:
            continue
        path = [start]
        comp[start] = -1
        k = f[start - 1]
        while not comp[k]:
            comp[k] = -1
            path.append(k)
            k = f[k - 1]
        cid = comp[k]
        if cid == -1:
            groups.append([])
            cid = len(groups)
        for v in path:
            comp[v] = cid
        groups[cid - 1].extend(path)
    return tuple(tuple(sorted(g)) for g in groups)


def connected_count(f) -> int:
    """Number of sub-domains, written z(f)."""
    return len(subdomains(f))


def is_connected(f) -> bool:
    return connected_count(f) == 1


def canonical_factorization(f) -> tuple[tuple[FunctionMap, tuple[int, ...]], ...]:
    """Pairs (factor, sub-domain), sub-domains by smallest element.

    Each factor is the restriction of f to one sub-domain, conjugated onto
    {1..card} by the unique increasing relabelling; factors are connected,
    and the relabelling preserves the sign of f(i) - i pointwise, so
    excedances, fixed points and deficiencies survive the factorization.
    """
    out = []
    for dom in subdomains(f):
        rank = {v: i for i, v in enumerate(dom, start=1)}
        out.append((trusted_map(rank[f[v - 1]] for v in dom), dom))
    return tuple(out)


def _cycles_are_loops(word) -> bool:
    # every periodic point is a fixed point, i.e. iteration settles pointwise
    n = len(word)
    state = [0] * (n + 1)  # 0 unknown, 1 settles on a fixed point, 2 does not
    for start in range(1, n + 1):
        if state[start]:
            continue
        path = []
        k = start
        while state[k] == 0:
            state[k] = -1
            path.append(k)
            k = word[k - 1]
        verdict = state[k] if state[k] > 0 else (1 if word[k - 1] == k else 2)
        for v in path:
            state[v] = verdict
        if verdict == 2:
            return False
    return True


def enumerate_maps(n: int, *, max_n: int = DEFAULT_MAP_SCAN_BUDGET) -> Iterator[FunctionMap]:
    """All n**n self-maps of {1..n}, in lexicographic image order."""
    check_budget(n, max_n, "endofunction scan")
    for image in itertools.product(range(1, n + 1), repeat=n):
        yield trusted_map(image)


def count_class_functions(
    n: int, kind: str, *, max_n: int = DEFAULT_MAP_SCAN_BUDGET
) -> int:
    """Exhaustively count maps by class.

    kind 'ultimately_idempotent': the n-th iterate equals the (n-1)-st, which
    happens exactly when every cycle of the functional graph is a loop.
    kind 'arborescence': the image of the (n-1)-st iterate is a single point,
    i.e. the map is connected and its one cycle is a loop.
    """
    if kind not in ("ultimately_idempotent", "arborescence"):
        raise ValueError(f"unknown kind {kind!r}")
    if n == 0:
        return 1 if kind == "ultimately_idempotent" else 0
    check_budget(n, max_n, "endofunction scan")
    count = 0
    if kind == "ultimately_idempotent":
        for image in itertools.product(range(1, n + 1), repeat=n):
            if _cycles_are_loops(image):
                count += 1
    else:
        for image in itertools.product(range(1, n + 1), repeat=n):
            if _cycles_are_loops(image) and len(subdomains(image)) == 1:
                count += 1
    return count


__all__ = [
    "FunctionMap",
    "canonical_factorization",
    "connected_count",
    "count_class_functions",
    "enumerate_maps",
    "is_connected",
    "subdomains",
    "trusted_map",
]
