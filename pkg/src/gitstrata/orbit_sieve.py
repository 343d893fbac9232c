"""Orbit representatives for the Weyl action on R-subsets of coordinates.

Scans combination ranks 1..C(N,R) in ascending order over a packed visited
bit array. Each unvisited rank is a new orbit's minimal-rank representative;
all its images under the induced action are then marked visited. The scan
is sequential by nature (each choice depends on earlier marking), so a run
is single-threaded; the heavy inner steps (permute, sort, rank, mark) are
vectorized over the whole action list at once.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .case_catalog import CaseDescriptor
from .combinadic import Combination, build_rank_tables, unrank
from .weyl_action import InducedActionList

__all__ = ["RepresentativeSet", "sieve", "dump_representatives"]

_CHUNK_BITS = 1 << 21


@dataclass(frozen=True)
class RepresentativeSet:
    """One minimal-rank combination per orbit, in ascending rank order."""

    case: CaseDescriptor
    R: int
    reps: tuple[Combination, ...]
    total_combinations: int

    def __len__(self) -> int:
        return len(self.reps)


def _rank_rows(a0: np.ndarray, cols: np.ndarray) -> np.ndarray:
    """0-based ranks of sorted index rows (0-based entries), via the a table."""
    ranks = np.zeros(cols.shape[0], dtype=np.int64)
    for i in range(cols.shape[1]):
        ranks += a0[i, cols[:, i]]
    return ranks


def sieve(case: CaseDescriptor, R: int, actions: InducedActionList) -> RepresentativeSet:
    if not 1 <= R <= case.rank:
        raise ValueError(f"R={R} outside 1..{case.rank}")
    N = case.N
    tables = build_rank_tables(N, R)
    M = tables.total

    # a0[i, j0] = a[i+1][j0+1]: summing over a sorted 0-based row gives the
    # 0-based rank directly (the 1-based rank drops its +1 here)
    a0 = np.zeros((R, N), dtype=np.int64)
    for i in range(1, R + 1):
        a0[i - 1] = tables.a[i][1:]

    perms0 = actions.zero_based().astype(np.int64)
    nbytes = (M + 7) >> 3
    try:
        visited = np.zeros(nbytes, dtype=np.uint8)
    except MemoryError:
        raise MemoryError(
            f"visited array needs {nbytes} bytes for C({N},{R}) = {M} ranks"
        ) from None

    reps: list[Combination] = []
    for lo in range(0, M, _CHUNK_BITS):
        hi = min(lo + _CHUNK_BITS, M)
        vis = np.unpackbits(visited[lo >> 3 : (hi + 7) >> 3], bitorder="little")[: hi - lo]
        vis = vis.astype(bool)
        pos = 0
        while pos < hi - lo:
            off = int(vis[pos:].argmin())
            if vis[pos + off]:
                break
            rep0 = lo + pos + off
            c = unrank(rep0 + 1, tables)
            reps.append(c)

            c0 = np.array(c, dtype=np.int64) - 1
            images = perms0[:, c0]
            images.sort(axis=1)
            ranks = _rank_rows(a0, images)

            np.bitwise_or.at(visited, ranks >> 3, (1 << (ranks & 7)).astype(np.uint8))
            local = ranks[(ranks >= lo) & (ranks < hi)] - lo
            vis[local] = True
            pos = pos + off + 1
    return RepresentativeSet(case=case, R=R, reps=tuple(reps), total_combinations=M)


def dump_representatives(rs: RepresentativeSet) -> str:
    """One representative per line, space-separated 1-based indices."""
    return "\n".join(" ".join(str(i) for i in c) for c in rs.reps) + "\n"
