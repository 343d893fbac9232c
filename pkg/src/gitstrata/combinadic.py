"""Rank/unrank sorted R-combinations of {1..N} in lexicographic order.

Ranks are 1-based. Both directions run off two precomputed tables:

    a[i][j] = C(N-i, R-i+1) - C(N-j, R-i+1)
    b[i][j] = C(N-i+1, R-i+1) - C(N-j, R-i+1)

valid for 1 <= i <= R and i <= j <= N-R+i, under the convention
C(n, n+1) = 0. The rank of c is 1 + sum_i a[i][c_i]; unranking peels off
one index at a time using the b table, which is nondecreasing in j.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass

__all__ = ["Combination", "RankTables", "binom", "build_rank_tables", "rank", "unrank"]

Combination = tuple[int, ...]


def binom(n: int, m: int) -> int:
    """Binomial coefficient C(n, m), extended so that C(n, n+1) = 0."""
    if n < 0 or m < 0 or m > n + 1:
        raise ValueError(f"binom({n}, {m}) out of range")
    if m == n + 1:
        return 0
    return math.comb(n, m)


@dataclass(frozen=True)
class RankTables:
    """Rank/unrank tables for R-combinations of {1..N}.

    Rows are indexed 1..R; row i holds columns i..N-R+i. Entries outside
    that range are stored as 0 padding so both tables are addressed
    directly as t.a[i][j].
    """

    N: int
    R: int
    a: tuple[tuple[int, ...], ...]
    b: tuple[tuple[int, ...], ...]

    @property
    def total(self) -> int:
        """Number of R-combinations of {1..N}."""
        return binom(self.N, self.R)


def build_rank_tables(N: int, R: int) -> RankTables:
    if not 1 <= R <= N:
        raise ValueError(f"need 1 <= R <= N, got N={N}, R={R}")
    a: list[tuple[int, ...]] = [()] * (R + 1)
    b: list[tuple[int, ...]] = [()] * (R + 1)
    for i in range(1, R + 1):
        k = R - i + 1
        arow = [0] * (N + 1)
        brow = [0] * (N + 1)
        for j in range(i, N - R + i + 1):
            arow[j] = binom(N - i, k) - binom(N - j, k)
            brow[j] = binom(N - i + 1, k) - binom(N - j, k)
        a[i] = tuple(arow)
        b[i] = tuple(brow)
    return RankTables(N=N, R=R, a=tuple(a), b=tuple(b))


def _validate(c: Combination, t: RankTables) -> tuple[int, ...]:
    if len(c) != t.R:
        raise ValueError(f"expected {t.R} indices, got {len(c)}")
    s = tuple(sorted(c))
    for i in range(len(s)):
        if not 1 <= s[i] <= t.N:
            raise ValueError(f"index {s[i]} outside 1..{t.N}")
        if i and s[i] == s[i - 1]:
            raise ValueError(f"duplicate index {s[i]}")
    return s


def rank(c: Combination, t: RankTables) -> int:
    """1-based lexicographic rank of the combination (input may be unsorted)."""
    s = _validate(c, t)
    total = 1
    a = t.a
    for i, ci in enumerate(s, start=1):
        total += a[i][ci]
    return total


def unrank(m: int, t: RankTables) -> Combination:
    """The combination whose 1-based lexicographic rank is m."""
    if not 1 <= m <= t.total:
        raise ValueError(f"rank {m} outside 1..{t.total}")
    N, R = t.N, t.R
    c: list[int] = []
    residual = m
    for i in range(1, R + 1):
        lo, hi = i, N - R + i
        brow = t.b[i]
        # smallest j in [lo, hi] with b[i][j] >= residual; brow is
        # nondecreasing there so bisect applies
        j = bisect_left(brow, residual, lo, hi + 1)
        c.append(j)
        residual -= t.a[i][j]
    return tuple(c)
