"""Weyl group enumeration and its induced action on coordinate indices.

The Weyl group of a case is the product of symmetric groups of the factor
sizes. Each element permutes the N coordinates: every coordinate's
multi-index is pushed factorwise through the element, wedge index sets are
re-sorted, and the result is re-encoded in the fixed coordinate order.
Wedge re-encoding goes through combinadic rank/unrank.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .case_catalog import CaseDescriptor, coord_strides, slot_dims, slot_index_sets
from .combinadic import build_rank_tables, rank

__all__ = [
    "Permutation",
    "InducedActionList",
    "enumerate_sym",
    "induced_action",
    "weyl_list",
    "dump_action_list",
]

Permutation = tuple[int, ...]

MAX_SYM_DEGREE = 8


def enumerate_sym(n: int) -> list[Permutation]:
    """All n! permutations of {1..n} as 1-based image tuples, lexicographic."""
    if not 1 <= n <= MAX_SYM_DEGREE:
        raise ValueError(f"symmetric group degree {n} outside 1..{MAX_SYM_DEGREE}")
    return list(itertools.permutations(range(1, n + 1)))


@dataclass(frozen=True)
class InducedActionList:
    """All induced coordinate permutations of a case, in enumeration order.

    images is a (weyl_order, N) array of 1-based coordinate images. Rows may
    in principle repeat (a config could act with a kernel); consumers must
    tolerate duplicates.
    """

    images: np.ndarray

    def __post_init__(self) -> None:
        self.images.setflags(write=False)

    def __len__(self) -> int:
        return self.images.shape[0]

    def __getitem__(self, k: int) -> Permutation:
        return tuple(int(x) for x in self.images[k])

    def __iter__(self):
        for row in self.images:
            yield tuple(int(x) for x in row)

    @property
    def elements(self) -> list[Permutation]:
        return list(self)

    def zero_based(self) -> np.ndarray:
        """(weyl_order, N) array of 0-based images, for vectorized consumers."""
        return self.images - 1


def _slot_contexts(case: CaseDescriptor):
    """Per slot: (factor size, degree, combination array, rank tables or None)."""
    ctxs = []
    index_sets = slot_index_sets(case)
    for s, sets in zip(case.slots, index_sets):
        n = case.factors[s.factor - 1]
        tables = build_rank_tables(n, s.degree) if s.degree > 1 else None
        combs = np.array(sets, dtype=np.int64)  # (d_i, degree), 1-based
        ctxs.append((n, s.degree, combs, tables))
    return ctxs


def induced_action(case: CaseDescriptor, g: tuple[Permutation, ...]) -> Permutation:
    """Coordinate permutation induced by one Weyl element.

    g supplies one permutation per factor, in factor order, each given as a
    1-based image tuple of the factor's degree.
    """
    if len(g) != len(case.factors):
        raise ValueError(f"expected {len(case.factors)} factor permutations, got {len(g)}")
    for t, n in zip(g, case.factors):
        if len(t) != n or sorted(t) != list(range(1, n + 1)):
            raise ValueError(f"bad degree-{n} permutation {t!r}")

    dims = slot_dims(case)
    strides = coord_strides(case)
    ctxs = _slot_contexts(case)

    # per-slot index image tables under g
    slot_imgs: list[list[int]] = []
    for (n, degree, combs, tables), s in zip(ctxs, case.slots):
        t = g[s.factor - 1]
        if degree == 1:
            slot_imgs.append([t[m] for m in range(n)])
        else:
            imgs = []
            for row in combs:
                moved = sorted(t[v - 1] for v in row)
                imgs.append(rank(tuple(moved), tables))
            slot_imgs.append(imgs)

    N = case.N
    out = [0] * N
    for c in range(N):
        image = 0
        # decompose c in the mixed radix given by the strides (last slot
        # slowest), then rebuild from the per-slot images
        for i in range(len(dims)):
            m = (c // strides[i]) % dims[i]
            image += strides[i] * (slot_imgs[i][m] - 1)
        out[c] = image + 1
    return tuple(out)


def _slot_image_tables(case: CaseDescriptor, ctxs) -> list[np.ndarray]:
    """For each slot, a (factor_order!, d_i) array of 0-based index images
    under every permutation of that slot's factor."""
    out = []
    for (n, degree, combs, tables), s in zip(ctxs, case.slots):
        perms = np.array(enumerate_sym(n), dtype=np.int64)  # (n!, n), 1-based
        if degree == 1:
            out.append(perms - 1)
            continue
        moved = perms[:, combs - 1]  # (n!, d_i, degree), 1-based images
        moved.sort(axis=2)
        arow = np.array([tables.a[i] for i in range(1, degree + 1)], dtype=np.int64)
        ranks = np.zeros(moved.shape[:2], dtype=np.int64)
        for i in range(degree):
            ranks += arow[i][moved[:, :, i]]
        out.append(ranks)  # 0-based ranks
    return out


def weyl_list(case: CaseDescriptor) -> InducedActionList:
    """All weyl_order induced coordinate permutations.

    Enumeration order is the product of the per-factor lexicographic
    permutation lists with the last factor varying fastest, matching
    itertools.product over enumerate_sym of each factor.
    """
    dims = slot_dims(case)
    strides = coord_strides(case)
    ctxs = _slot_contexts(case)
    tables = _slot_image_tables(case, ctxs)

    N = case.N
    L = case.weyl_order
    coords = np.arange(N, dtype=np.int64)
    # per-slot digit of each coordinate in the mixed-radix order
    digits = [(coords // strides[i]) % dims[i] for i in range(len(dims))]

    # factor-permutation index of each of the L group elements, last factor
    # fastest
    orders = [len(enumerate_sym(n)) for n in case.factors]
    radix = [0] * len(orders)
    acc = 1
    for f in range(len(orders) - 1, -1, -1):
        radix[f] = acc
        acc *= orders[f]
    element = np.arange(L, dtype=np.int64)

    images = np.zeros((L, N), dtype=np.int64)
    for i, s in enumerate(case.slots):
        f = s.factor - 1
        fidx = (element // radix[f]) % orders[f]
        images += strides[i] * tables[i][fidx][:, digits[i]]
    return InducedActionList(images=(images + 1).astype(np.int32))


def dump_action_list(wl: InducedActionList) -> str:
    """One permutation per line, space-separated 1-based images."""
    return "\n".join(" ".join(str(int(x)) for x in row) for row in wl.images) + "\n"
