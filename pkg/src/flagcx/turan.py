"""Turán coefficients binom(n, k)_d, the number of k-cliques of T_d(n)."""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .complex import h_vector
from .report import CheckReport, verdict


def turan_parts(n: int, d: int) -> list[int]:
    """Part sizes of T_d(n), largest first; parts of size zero are kept."""
    if d < 1:
        raise ValueError("d must be positive")
    q, rem = divmod(max(n, 0), d)
    return [q + 1] * rem + [q] * (d - rem)


def _elementary_symmetric(values: list[int], top: int) -> list[int]:
    e = [1] + [0] * top
    for x in values:
        for k in range(top, 0, -1):
            e[k] += e[k - 1] * x
    return e


@lru_cache(maxsize=None)
def turan_row(n: int, d: int) -> tuple[int, ...]:
    """(binom(n,0)_d, ..., binom(n,d)_d) via elementary symmetric functions."""
    if n < 0:
        return (0,) * (d + 1)
    return tuple(_elementary_symmetric(turan_parts(n, d), d))


def turan_coeff(n: int, k: int, d: int) -> int:
    """binom(n, k)_d, extended by zero when k > n, k < 0 or n < 0."""
    if d < 1:
        raise ValueError("d must be positive")
    if n < 0 or k < 0 or k > n or k > d:
        return 0
    return turan_row(n, d)[k]


def turan_row_pascal(n: int, d: int) -> tuple[int, ...]:
    """Same row as :func:`turan_row`, computed with the Pascal-triangle variant.

    Starts from the row of m in [d] with m = n (mod d), which is a plain
    binomial row, and advances m -> m + d one triangle at a time.
    """
    if n < 1 or d < 1:
        raise ValueError("n and d must be positive")
    m = (n - 1) % d + 1
    row = [comb(m, i) for i in range(d + 1)]
    while m < n:
        last = row + [0]  # last entry of triangle row i is binom(m, i)_d
        tri = [[1]]
        for r in range(1, d + 2):
            prev = tri[-1]
            cur = [1] + [prev[j - 1] + prev[j] for j in range(1, r)] + [last[r]]
            tri.append(cur)
        row = tri[-1][: d + 1]
        m += d
    return tuple(row)


def turan_f_vector(n: int, d: int) -> tuple[int, ...]:
    """f-vector of the Turán complex Delta(T_d(n)); Delta(T_d(0)) is {emptyset}."""
    row = turan_row(n, d)
    top = min(n, d)
    return row[: top + 1]


def check_h_equals_f(n: int, d: int) -> CheckReport:
    """h(Delta(T_d(n))) == f(Delta(T_d(n-d))), padded with zeros to length d+1."""
    if n < d:
        raise ValueError("need n >= d")
    h = h_vector(turan_f_vector(n, d))
    f_small = turan_f_vector(n - d, d)
    padded = tuple(f_small) + (0,) * (len(h) - len(f_small))
    return CheckReport(
        check="LEM_H_EQ_F",
        instance=f"n={n},d={d}",
        verdict=verdict(h == padded),
        witness={"h": list(h), "f_smaller": list(padded)},
    )


def check_sum_identity(m: int, d: int) -> CheckReport:
    """sum_k binom(m,k)_d == binom(m+d, d)_d."""
    if m < 1 or d < 1:
        raise ValueError("m and d must be positive")
    lhs = sum(turan_coeff(m, k, d) for k in range(d + 1))
    rhs = turan_coeff(m + d, d, d)
    return CheckReport(
        check="LEM_SUM",
        instance=f"m={m},d={d}",
        verdict=verdict(lhs == rhs),
        witness={"lhs": lhs, "rhs": rhs},
    )
