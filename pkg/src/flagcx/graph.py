"""Graphs as adjacency bit rows, clique complexes, Turán graphs, graph6."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .complex import Complex
from .report import FAIL, CheckReport, verdict
from .turan import turan_coeff, turan_parts


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 0..n-1; ``adj[v]`` is the neighbour bitmask of v."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency rows must match n")
        for v, row in enumerate(self.adj):
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            if row >> self.n:
                raise ValueError(f"vertex {v} has a neighbour outside range({self.n})")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"edge {v}-{u} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << v) for v in range(n)))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def cliques(g: Graph) -> Iterator[tuple[int, ...]]:
    """Every clique (including the empty one), each exactly once."""
    yield ()

    def extend(clique: tuple[int, ...], cand: int) -> Iterator[tuple[int, ...]]:
        for v in _bits(cand):
            grown = clique + (v,)
            yield grown
            # only larger-indexed candidates keep each clique unique
            yield from extend(grown, cand & g.adj[v] & ~((2 << v) - 1))

    yield from extend((), (1 << g.n) - 1)


def clique_complex(g: Graph, labels: list[int] | None = None) -> Complex:
    """Delta(G); vertex v of g becomes ``labels[v]`` (default: v itself)."""
    if labels is None:
        return Complex.from_closed(frozenset(c) for c in cliques(g))
    return Complex.from_closed(frozenset(labels[v] for v in c) for c in cliques(g))


def underlying_graph(c: Complex) -> tuple[Graph, list[int]]:
    """The 1-skeleton of c as a Graph, plus the vertex label of each graph vertex."""
    labels = c.vertices
    pos = {v: i for i, v in enumerate(labels)}
    edges = [(pos[a], pos[b]) for a, b in (sorted(e) for e in c.faces_of_dim(1))]
    return Graph.from_edges(len(labels), edges), labels


def is_flag(c: Complex) -> bool:
    """Every minimal non-face has at most two elements."""
    g, _ = underlying_graph(c)
    # c is always contained in the clique complex of its 1-skeleton
    return sum(1 for _ in cliques(g)) == len(c)


def turan_graph(n: int, d: int) -> Graph:
    """T_d(n), with parts filled as consecutive vertex blocks, largest first."""
    if n < 1 or d < 1:
        raise ValueError("n and d must be positive")
    part_of = []
    for p, size in enumerate(turan_parts(n, d)):
        part_of += [p] * size
    edges = [(u, v) for u, v in combinations(range(n), 2) if part_of[u] != part_of[v]]
    return Graph.from_edges(n, edges)


def turan_complex(n: int, d: int) -> Complex:
    return clique_complex(turan_graph(n, d))


def components(g: Graph) -> list[list[int]]:
    seen = 0
    out = []
    for start in range(g.n):
        if seen >> start & 1:
            continue
        comp, frontier = 0, 1 << start
        while frontier:
            comp |= frontier
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
        seen |= comp
        out.append(list(_bits(comp)))
    return out


def multipartite_parts(g: Graph) -> list[list[int]] | None:
    """The parts if g is complete multipartite, otherwise None.

    Parts are the connected components of the complement; g is complete
    multipartite exactly when each of them is independent in g and every
    cross pair is an edge.
    """
    parts = components(complement(g))
    part_of = {}
    for i, part in enumerate(parts):
        for v in part:
            part_of[v] = i
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.has_edge(u, v) != (part_of[u] != part_of[v]):
                return None
    return parts


def is_turan(g: Graph, d: int) -> bool:
    """g is isomorphic to T_d(n) with n = g.n."""
    if g.n == 0:
        return True
    parts = multipartite_parts(g)
    if parts is None:
        return False
    sizes = sorted((len(p) for p in parts), reverse=True)
    expected = [s for s in turan_parts(g.n, d) if s]
    return sizes == expected


def is_turan_complex(c: Complex, d: int) -> bool:
    """c is isomorphic to Delta(T_d(n)) with n = f_0(c)."""
    if not is_flag(c):
        return False
    g, _ = underlying_graph(c)
    return is_turan(g, d)


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by backtracking (desk-scale graphs)."""
    if g.n == 0:
        return 0
    order = sorted(range(g.n), key=lambda v: -g.degree(v))

    def colorable(k: int) -> bool:
        color = [-1] * g.n

        def place(i: int) -> bool:
            if i == g.n:
                return True
            v = order[i]
            used = {color[u] for u in _bits(g.adj[v])}
            top = max(color) + 1  # symmetry break: at most one fresh color
            for c in range(min(k, top + 1)):
                if c not in used:
                    color[v] = c
                    if place(i + 1):
                        return True
            color[v] = -1
            return False

        return place(0)

    k = 1
    while not colorable(k):
        k += 1
    return k


def zykov_check(c: Complex) -> CheckReport:
    """f_i(c) <= binom(n, i+1)_d for i in [d-1], equality only for Delta(T_d(n))."""
    if not is_flag(c):
        raise ValueError("Zykov's bound applies to flag complexes")
    f = c.f_vector()
    d = len(f) - 1
    n = f[1] if d >= 1 else 0
    lhs = [f[i + 1] for i in range(1, d)]
    rhs = [turan_coeff(n, i + 1, d) for i in range(1, d)]
    ok = all(a <= b for a, b in zip(lhs, rhs))
    tight = any(a == b for a, b in zip(lhs, rhs))
    iso = None
    if ok and tight:
        iso = is_turan_complex(c, d)
        ok = iso
    return CheckReport(
        check="ZYKOV",
        instance=f"f={list(f)}",
        verdict=FAIL if not ok else verdict(True, tight),
        witness={"n": n, "d": d, "f": lhs, "turan": rhs, "isomorphic_to_turan": iso},
    )


# -- graph6 ------------------------------------------------------------


def _n_prefix(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return chr(126) * 2 + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    bits = [g.has_edge(i, j) for j in range(1, g.n) for i in range(j)]
    bits += [False] * (-len(bits) % 6)
    body = "".join(
        chr(63 + sum(b << (5 - t) for t, b in enumerate(bits[s : s + 6])))
        for s in range(0, len(bits), 6)
    )
    return _n_prefix(g.n) + body


def from_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = [ord(ch) - 63 for ch in s]
    if any(x < 0 or x > 63 for x in data):
        raise ValueError(f"not a graph6 string: {text!r}")
    if data[0] != 63:
        n, data = data[0], data[1:]
    elif data[1] != 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        data = data[4:]
    else:
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        data = data[8:]
    need = n * (n - 1) // 2
    if len(data) != -(-need // 6):
        raise ValueError(f"graph6 body has the wrong length for n={n}")
    bits = [(x >> (5 - t)) & 1 for x in data for t in range(6)]
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return Graph.from_edges(n, edges)


def read_graph6_file(path) -> list[Graph]:
    with open(path) as fh:
        return [from_graph6(line) for line in fh if line.strip()]
