"""(k, r)-canonical representations and the operators built on them.

A representation of N is a decreasing index sequence (N_k, N_{k-1}, ...,
N_{k-s}) with

    N = sum_i binom(N_{k-i}, k-i)_{r-i},
    N_{k-i} - floor(N_{k-i} / (r-i)) > N_{k-i-1},
    N_{k-s} >= k-s > 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .turan import turan_coeff


@dataclass(frozen=True)
class CanonRep:
    k: int
    r: int
    indices: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.indices) - 1

    @property
    def terms(self) -> list[tuple[int, int, int]]:
        """Triples (N_{k-i}, k-i, r-i)."""
        return [(n, self.k - i, self.r - i) for i, n in enumerate(self.indices)]

    def is_valid(self) -> bool:
        if not self.indices or self.r < self.k or self.k < 1:
            return False
        for i in range(self.s):
            a, b = self.indices[i], self.indices[i + 1]
            if a - a // (self.r - i) <= b:
                return False
        return self.indices[-1] >= self.k - self.s > 0

    def __int__(self) -> int:
        return eval_rep(self)


def _check_kr(k: int, r: int) -> None:
    if k < 1 or r < k:
        raise ValueError(f"need r >= k >= 1, got k={k}, r={r}")


def _largest_index(N: int, k: int, r: int) -> int:
    """Largest n with binom(n, k)_r <= N (requires N >= 1 and r >= k)."""
    lo = k  # binom(k, k)_r == 1
    hi = k + 1
    while turan_coeff(hi, k, r) <= N:
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if turan_coeff(mid, k, r) <= N:
            lo = mid
        else:
            hi = mid
    return lo


def canonical_rep(N: int, k: int, r: int) -> CanonRep:
    """Greedy construction; validity is asserted before returning."""
    if N < 1:
        raise ValueError(f"canonical representations need N >= 1, got {N}")
    _check_kr(k, r)
    indices = []
    rest, kk, rr = N, k, r
    while rest > 0:
        if kk < 1:
            raise ArithmeticError(f"greedy descent ran out of levels for N={N}, k={k}, r={r}")
        n = _largest_index(rest, kk, rr)
        indices.append(n)
        rest -= turan_coeff(n, kk, rr)
        kk, rr = kk - 1, rr - 1
    rep = CanonRep(k, r, tuple(indices))
    if not rep.is_valid():
        raise ArithmeticError(f"greedy representation {rep} violates the side conditions")
    return rep


def eval_rep(rep: CanonRep) -> int:
    return sum(turan_coeff(n, kk, rr) for n, kk, rr in rep.terms)


def shift_up(rep: CanonRep) -> int:
    """N_+: every index N_{k-i} replaced by N_{k-i} + (r-i)."""
    return sum(turan_coeff(n + rr, kk, rr) for n, kk, rr in rep.terms)


def shift_down(rep: CanonRep) -> int:
    """N_-: every index N_{k-i} replaced by N_{k-i} - (r-i), zero convention."""
    return sum(turan_coeff(n - rr, kk, rr) for n, kk, rr in rep.terms)


def shift_up_value(N: int, k: int, r: int) -> int:
    return 0 if N == 0 else shift_up(canonical_rep(N, k, r))


def shift_down_value(N: int, k: int, r: int) -> int:
    return 0 if N == 0 else shift_down(canonical_rep(N, k, r))


def shift_down_truncation(rep: CanonRep) -> int | None:
    """s_0 = max{t <= s : N_{k-t} - (r-t) >= k-t}; None when N_k - r < k."""
    if rep.indices[0] - rep.r < rep.k:
        return None
    return max(t for t, (n, kk, rr) in enumerate(rep.terms) if n - rr >= kk)


def shadow_down(N: int, k: int, r: int) -> int:
    """The lower operator: binom(N_{k-i}, k-i)_{r-i} -> binom(N_{k-i}, k-i-1)_{r-i}."""
    if N == 0:
        return 0
    return sum(turan_coeff(n, kk - 1, rr) for n, kk, rr in canonical_rep(N, k, r).terms)


def shadow_up(N: int, k: int, r: int) -> int:
    """The upper operator: binom(N_{k-i}, k-i)_{r-i} -> binom(N_{k-i}, k-i+1)_{r-i}."""
    if N == 0:
        return 0
    return sum(turan_coeff(n, kk + 1, rr) for n, kk, rr in canonical_rep(N, k, r).terms)


def iterate_shadow_down(N: int, k: int, r: int, j: int) -> int:
    """Closed form of the (j+1)-fold lower shadow starting at level k, 0 <= j < k."""
    if not 0 <= j < k:
        raise ValueError("need 0 <= j < k")
    if N == 0:
        return 0
    return sum(turan_coeff(n, kk - j - 1, rr) for n, kk, rr in canonical_rep(N, k, r).terms)


def iterate_shadow_up(N: int, k: int, r: int, j: int) -> int:
    """Closed form of the (j+1)-fold upper shadow starting at level k, j >= 0."""
    if j < 0:
        raise ValueError("need j >= 0")
    if N == 0:
        return 0
    return sum(turan_coeff(n, kk + j + 1, rr) for n, kk, rr in canonical_rep(N, k, r).terms)


def compose_shadow_down(N: int, k: int, r: int, j: int) -> int:
    """Step-by-step composition matching :func:`iterate_shadow_down`."""
    for level in range(k, k - j - 1, -1):
        N = shadow_down(N, level, r)
    return N


def compose_shadow_up(N: int, k: int, r: int, j: int) -> int:
    """Step-by-step composition matching :func:`iterate_shadow_up`."""
    for level in range(k, k + j + 1):
        if N == 0:
            return 0
        N = shadow_up(N, level, r)
    return N


def compare_shift(L: int, N: int, k: int, r: int) -> tuple[bool, bool]:
    """(L_+ <= N, L <= N_-); the two always agree."""
    if L < 1 or N < 1:
        raise ValueError("L and N must be positive")
    left = shift_up_value(L, k, r) <= N
    right = L <= shift_down_value(N, k, r)
    if left != right:
        raise ArithmeticError(f"shift comparison disagrees for L={L}, N={N}, k={k}, r={r}")
    return left, right


def rep_less(a: CanonRep, b: CanonRep) -> bool:
    """Order of two (k, r)-representations read off their index sequences.

    a < b iff a's indices are a proper prefix of b's, or the first differing
    index is smaller in a.
    """
    for x, y in zip(a.indices, b.indices):
        if x != y:
            return x < y
    return len(a.indices) < len(b.indices)


def betti_bound(N: int, k: int, d: int) -> int:
    """Upper bound on the top Betti number of a balanced or flag (d-1)-complex
    with f_{k-1} = N: each term binom(N_{d-i}, k-i)_{d-i} of the (k, d)
    representation becomes binom(N_{d-i} - (d-i), d-i)_{d-i}."""
    rep = canonical_rep(N, k, d)
    return sum(turan_coeff(n - rr, rr, rr) for n, _, rr in rep.terms)


def top_count_for_bound(N: int, k: int, d: int) -> int:
    """sum_i binom(N_{d-i}, d-i)_{d-i} over the (k, d) representation of N;
    the top face count of the revlex complex that attains :func:`betti_bound`."""
    rep = canonical_rep(N, k, d)
    return sum(turan_coeff(n, rr, rr) for n, _, rr in rep.terms)


def face_lower_bound(a: int, d: int, i: int) -> int:
    """Lower bound on f_{i-1} given top Betti number a > 0 of a (d-1)-complex:
    sum_j binom(a_{d-j} + d - j, i - j)_{d-j} over the (d, d) representation."""
    rep = canonical_rep(a, d, d)
    return sum(turan_coeff(n + rr, i - j, rr) for j, (n, _, rr) in enumerate(rep.terms))
