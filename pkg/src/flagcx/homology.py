"""Reduced simplicial homology over prime fields via boundary-matrix ranks."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .complex import Complex


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def boundary_matrix(c: Complex, k: int, p: int = 2) -> list[list[int]]:
    """Dense matrix of the k-th boundary map mod p.

    Rows are the (k-1)-faces, columns the k-faces, both in canonical order;
    for k = 0 the single row is the empty face (augmentation).
    """
    _require_prime(p)
    rows = c.faces_of_dim(k - 1)
    cols = c.faces_of_dim(k)
    pos = {F: i for i, F in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for j, F in enumerate(cols):
        for t, v in enumerate(sorted(F)):
            mat[pos[F - {v}]][j] = (-1) ** t % p
    return mat


def _columns_gf2(c: Complex, k: int) -> list[int]:
    pos = {F: i for i, F in enumerate(c.faces_of_dim(k - 1))}
    out = []
    for F in c.faces_of_dim(k):
        word = 0
        for v in F:
            word |= 1 << pos[F - {v}]
        out.append(word)
    return out


def rank_gf2(vectors: list[int]) -> int:
    """Rank of bit-packed vectors over GF(2): XOR reduction on leading bits."""
    pivots: dict[int, int] = {}
    for vec in vectors:
        while vec:
            lead = vec.bit_length() - 1
            basis = pivots.get(lead)
            if basis is None:
                pivots[lead] = vec
                break
            vec ^= basis
    return len(pivots)


def rank_mod_p(matrix: list[list[int]], p: int) -> int:
    """Rank over F_p by row reduction (column pivot search, row elimination)."""
    if p == 2:
        return rank_gf2([sum(1 << j for j, x in enumerate(row) if x % 2) for row in matrix])
    rows = [[x % p for x in row] for row in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        prow = [x * inv % p for x in rows[rank]]
        rows[rank] = prow
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                m = rows[r][col]
                rows[r] = [(x - m * y) % p for x, y in zip(rows[r], prow)]
        rank += 1
        if rank == len(rows):
            break
    return rank


def transpose(matrix: list[list[int]]) -> list[list[int]]:
    return [list(col) for col in zip(*matrix)] if matrix else []


def boundary_rank(c: Complex, k: int, p: int = 2) -> int:
    if k < 0 or k > c.dim:
        return 0
    if p == 2:
        return rank_gf2(_columns_gf2(c, k))
    return rank_mod_p(boundary_matrix(c, k, p), p)


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers beta_{-1}, ..., beta_{dim}."""

    values: tuple[int, ...]
    p: int = 2

    def __getitem__(self, k: int) -> int:
        i = k + 1
        if i < 0:
            raise IndexError(k)
        return self.values[i] if i < len(self.values) else 0

    def reduced(self) -> list[int]:
        """beta_0, ..., beta_dim."""
        return list(self.values[1:])

    def __iter__(self):
        return iter(self.values)


@lru_cache(maxsize=4096)
def betti_vector(c: Complex, p: int = 2) -> BettiVector:
    _require_prime(p)
    ranks = {k: boundary_rank(c, k, p) for k in range(0, c.dim + 2)}
    vals = []
    for k in range(-1, c.dim + 1):
        f_k = len(c.faces_of_dim(k))
        vals.append(f_k - ranks.get(k, 0) - ranks.get(k + 1, 0))
    return BettiVector(tuple(vals), p)


def betti(c: Complex, k: int, p: int = 2) -> int:
    return betti_vector(c, p)[k]
