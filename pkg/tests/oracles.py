"""Independent reference implementations used only by the tests."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import prod

import networkx as nx


def parts(n: int, d: int) -> list[int]:
    return [len(range(i, n, d)) for i in range(d)]


@lru_cache(maxsize=None)
def turan_by_products(n: int, k: int, d: int) -> int:
    """Sum over k-subsets of parts of the product of their sizes."""
    if n < 0 or k < 0 or k > n:
        return 0
    return sum(prod(c) for c in combinations(parts(n, d), k))


def nx_turan_graph(n: int, d: int) -> nx.Graph:
    # networkx insists on d <= n; T_d(n) is complete otherwise
    return nx.complete_graph(n) if d >= n else nx.turan_graph(n, d)


def turan_by_cliques(n: int, d: int) -> list[int]:
    """Clique counts of T_d(n) built and enumerated with networkx, by size 0..d."""
    g = nx_turan_graph(n, d)
    counts = [1] + [0] * d
    for clique in nx.enumerate_all_cliques(g):
        counts[len(clique)] += 1
    return counts


def side_conditions_ok(indices: tuple[int, ...], k: int, r: int) -> bool:
    s = len(indices) - 1
    for i in range(s):
        if indices[i] - indices[i] // (r - i) <= indices[i + 1]:
            return False
    return indices[-1] >= k - s > 0


@lru_cache(maxsize=None)
def all_representations(k: int, r: int, limit: int) -> dict[int, list[tuple[int, ...]]]:
    """Every index sequence satisfying the side conditions with value <= limit,
    bucketed by value.  Uniqueness means each bucket has one entry."""
    out: dict[int, list[tuple[int, ...]]] = {}

    def grow(prefix: tuple[int, ...], value: int) -> None:
        i = len(prefix)
        if prefix and side_conditions_ok(prefix, k, r):
            out.setdefault(value, []).append(prefix)
        kk, rr = k - i, r - i
        if kk < 1:
            return
        if prefix:
            a = prefix[-1]
            top = a - a // (r - i + 1) - 1
        else:
            top = None
        n = kk
        while top is None or n <= top:
            v = turan_by_products(n, kk, rr)
            if value + v > limit:
                break
            grow(prefix + (n,), value + v)
            n += 1

    grow((), 0)
    return out
