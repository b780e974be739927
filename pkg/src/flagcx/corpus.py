"""Instance corpora: isomorph-free graphs and seeded color-shifted complexes."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cmp_to_key
from pathlib import Path
from typing import Iterator, Optional

from .colored import ColoredComplex, ColoredGround, revlex_compare
from .complex import Complex
from .graph import Graph, from_graph6, read_graph6_file, to_graph6

MAX_INTERNAL_N = 8

# OEIS A000088, graphs on n unlabeled vertices
GRAPH_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def _refined_colors(g: Graph) -> list[int]:
    """Stable vertex coloring by iterated neighbourhood refinement, starting from degrees.

    Colors are ranks of isomorphism-invariant signatures, so the ordered
    partition they induce is itself invariant.
    """
    colors = [g.degree(v) for v in range(g.n)]
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in range(g.n) if g.adj[v] >> u & 1)))
            for v in range(g.n)
        ]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if len(ranking) == len(set(colors)):
            return new
        colors = new


def canonical_labeling(g: Graph) -> list[int]:
    """A vertex order whose relabelled graph is the same for all isomorphic inputs.

    Among orders that respect the refined cells, picks the one minimizing the
    upper-triangle adjacency read column by column; partial columns prune the
    search.
    """
    n = g.n
    colors = _refined_colors(g)
    slot_color = sorted(colors)
    best: list[int] = []
    best_code: list[int] = []
    perm: list[int] = []
    code: list[int] = []
    used = [False] * n

    def search(t: int) -> None:
        nonlocal best, best_code
        if t == n:
            if not best or code < best_code:
                best, best_code = perm[:], code[:]
            return
        for v in range(n):
            if used[v] or colors[v] != slot_color[t]:
                continue
            col = 0
            for u in perm:
                col = (col << 1) | (g.adj[u] >> v & 1)
            # prune a prefix that is already worse than the best complete code
            if best and code == best_code[:t] and col > best_code[t]:
                continue
            perm.append(v)
            code.append(col)
            used[v] = True
            search(t + 1)
            used[v] = False
            code.pop()
            perm.pop()

    search(0)
    return best


def canonical_form(g: Graph) -> Graph:
    order = canonical_labeling(g)
    pos = {v: i for i, v in enumerate(order)}
    return Graph.from_edges(g.n, [(pos[u], pos[v]) for u, v in g.edges()])


def canonical_graph6(g: Graph) -> str:
    return to_graph6(canonical_form(g))


def enumerate_graphs(n: int) -> list[Graph]:
    """One canonical representative per isomorphism class on exactly n vertices,
    sorted by graph6 string."""
    if n > MAX_INTERNAL_N:
        raise ValueError(
            f"internal enumeration stops at n={MAX_INTERNAL_N}; "
            "feed larger corpora from a graph6 file (e.g. produced by nauty's geng)"
        )
    if n < 0:
        raise ValueError("n must be non-negative")
    layer = {to_graph6(Graph.empty(0))}
    for m in range(1, n + 1):
        nxt = set()
        for code in layer:
            base = from_graph6(code)
            for mask in range(1 << (m - 1)):
                rows = [row | ((mask >> v & 1) << (m - 1)) for v, row in enumerate(base.adj)]
                nxt.add(canonical_graph6(Graph(m, tuple(rows) + (mask,))))
        layer = nxt
    return [from_graph6(code) for code in sorted(layer)]


# -- color-shifted balanced complexes ----------------------------------


def shift_closure(gens: list[dict[int, int]], d: int) -> Complex:
    """Smallest color-shifted complex containing the given faces.

    A face is a map color -> index; its closure takes every sub-face with
    every choice of smaller-or-equal indices.
    """
    faces = set()

    def expand(items: list[tuple[int, int]], acc: frozenset) -> None:
        if not items:
            faces.add(acc)
            return
        (color, index), rest = items[0], items[1:]
        expand(rest, acc)
        for j in range(1, index + 1):
            expand(rest, acc | {(j - 1) * d + color})

    for gen in gens:
        expand(sorted(gen.items()), frozenset())
    return Complex.from_closed(faces)


def random_color_shifted(rng: random.Random, d_max: int = 4, lam_max: int = 3) -> ColoredComplex:
    """A balanced color-shifted complex: a random revlex prefix of top faces
    inside a random ground (d <= d_max, class sizes <= lam_max), perturbed by
    extra random faces, then shift-closed."""
    d = rng.randint(1, d_max)
    sizes = [rng.randint(1, lam_max) for _ in range(d)]
    ground = ColoredGround(d, tuple(sizes))
    tops = _bounded_tops(d, sizes)
    prefix = tops[: rng.randint(1, len(tops))]
    gens = [{ground.color(v): ground.index(v) for v in t} for t in prefix]
    for _ in range(rng.randint(0, 3)):
        colors = rng.sample(range(1, d + 1), rng.randint(1, d))
        gens.append({c: rng.randint(1, sizes[c - 1]) for c in colors})
    return ColoredComplex(shift_closure(gens, d), d)


def _bounded_tops(d: int, sizes: list[int]) -> list[tuple[int, ...]]:
    """Every rainbow d-set inside the bounded ground, in revlex order."""
    ground = ColoredGround(d, tuple(sizes))
    out = []
    stack: list[list[int]] = [[]]
    while stack:
        partial = stack.pop()
        c = len(partial) + 1
        if c > d:
            out.append(tuple(sorted(partial)))
            continue
        for j in range(1, sizes[c - 1] + 1):
            stack.append(partial + [ground.vertex(c, j)])
    return sorted(out, key=cmp_to_key(revlex_compare))


def balanced_instance(seed: int, i: int) -> ColoredComplex:
    return random_color_shifted(random.Random(f"{seed}:{i}"))


# -- corpora --------------------------------------------------------------


@dataclass(frozen=True)
class Corpus:
    """Where instances come from: ``graphs`` (all graphs on 1..n vertices),
    ``g6`` (a graph6 file) or ``balanced`` (seeded color-shifted complexes)."""

    kind: str
    n: int = 0
    path: Optional[str] = None
    seed: int = 0
    count: int = 0

    @classmethod
    def graphs(cls, n: int) -> "Corpus":
        return cls("graphs", n=n)

    @classmethod
    def g6(cls, path) -> "Corpus":
        return cls("g6", path=str(path))

    @classmethod
    def balanced(cls, count: int, seed: int = 0) -> "Corpus":
        return cls("balanced", seed=seed, count=count)

    def descriptors(self) -> list[str]:
        if self.kind == "graphs":
            return [to_graph6(g) for m in range(1, self.n + 1) for g in enumerate_graphs(m)]
        if self.kind == "g6":
            return [to_graph6(g) for g in read_graph6_file(Path(self.path))]
        if self.kind == "balanced":
            return [f"balanced:{self.seed}:{i}" for i in range(self.count)]
        raise ValueError(f"unknown corpus kind {self.kind!r}")

    def __iter__(self) -> Iterator[str]:
        return iter(self.descriptors())
