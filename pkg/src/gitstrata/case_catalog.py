"""The four built-in group/space cases and user-defined variants.

A case is a product of general linear factors acting on a tensor product
of slots, each slot a standard or exterior-power representation of one
factor. The catalog derives everything downstream code needs: the list of
N weight vectors in the fixed coordinate order, the block structure of the
D-dimensional dual space, the invariant inner product, and the dominant
chamber normal form.

Coordinate order: the last slot's index varies slowest; the remaining
slots form the inner loop lexicographically with the last of them fastest.
Wedge indices within a slot are lexicographic combinations.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .combinadic import binom, build_rank_tables, unrank
from .exact_linalg import RatVector, dot

__all__ = [
    "Slot",
    "CaseDescriptor",
    "builtin_case",
    "BUILTIN_IDS",
    "weights",
    "inner_product",
    "chamber_sort",
    "zero_vector",
    "parse_case_config",
    "case_config_text",
    "slot_dims",
    "slot_index_sets",
    "coord_strides",
]

KIND_DEGREE = {"standard": 1, "wedge2": 2, "wedge3": 3}
DEGREE_KIND = {v: k for k, v in KIND_DEGREE.items()}


@dataclass(frozen=True)
class Slot:
    """One tensor slot: an exterior power of the standard rep of a factor.

    factor is 1-based into the case's factor list; degree is the exterior
    power (1 = standard).
    """

    factor: int
    degree: int


@dataclass(frozen=True)
class CaseDescriptor:
    label: str
    factors: tuple[int, ...]
    slots: tuple[Slot, ...]

    @property
    def N(self) -> int:
        """Dimension of the representation: product of per-slot dimensions."""
        return math.prod(slot_dims(self))

    @property
    def D(self) -> int:
        """Ambient coordinate count of the dual space: sum of factor sizes."""
        return sum(self.factors)

    @property
    def rank(self) -> int:
        return sum(n - 1 for n in self.factors)

    @property
    def weyl_order(self) -> int:
        return math.prod(math.factorial(n) for n in self.factors)

    @property
    def block_bounds(self) -> tuple[tuple[int, int], ...]:
        """Per-factor half-open 0-based coordinate ranges partitioning 0..D."""
        bounds = []
        start = 0
        for n in self.factors:
            bounds.append((start, start + n))
            start += n
        return tuple(bounds)


_BUILTINS = {
    1: CaseDescriptor(
        label="1",
        factors=(3, 3, 2),
        slots=(Slot(1, 1), Slot(2, 1), Slot(3, 1)),
    ),
    2: CaseDescriptor(
        label="2",
        factors=(6, 2),
        slots=(Slot(1, 2), Slot(2, 1)),
    ),
    3: CaseDescriptor(
        label="3",
        factors=(5, 4),
        slots=(Slot(1, 2), Slot(2, 1)),
    ),
    4: CaseDescriptor(
        label="4",
        factors=(8,),
        slots=(Slot(1, 3),),
    ),
}

BUILTIN_IDS = tuple(sorted(_BUILTINS))


def builtin_case(case_id: int) -> CaseDescriptor:
    try:
        return _BUILTINS[case_id]
    except KeyError:
        raise ValueError(f"no builtin case {case_id!r}; choose from {BUILTIN_IDS}") from None


def slot_dims(case: CaseDescriptor) -> tuple[int, ...]:
    """Per-slot dimension C(n, w)."""
    return tuple(binom(case.factors[s.factor - 1], s.degree) for s in case.slots)


def slot_index_sets(case: CaseDescriptor) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Per slot, all index sets in enumeration order.

    Standard slots list ((1,), ..., (n,)); wedge slots list the sorted
    degree-w combinations of {1..n} in lexicographic order.
    """
    out = []
    for s in case.slots:
        n = case.factors[s.factor - 1]
        if s.degree == 1:
            out.append(tuple((i,) for i in range(1, n + 1)))
        else:
            t = build_rank_tables(n, s.degree)
            out.append(tuple(unrank(m, t) for m in range(1, t.total + 1)))
    return tuple(out)


def coord_strides(case: CaseDescriptor) -> tuple[int, ...]:
    """Per-slot stride turning 0-based slot indices into a 0-based coordinate.

    coordinate = sum_i stride[i] * (m_i - 1), with the last slot slowest and
    the next-to-last fastest.
    """
    dims = slot_dims(case)
    k = len(dims)
    strides = [0] * k
    if k == 0:
        return ()
    strides[k - 1] = math.prod(dims[: k - 1])
    acc = 1
    for i in range(k - 2, -1, -1):
        strides[i] = acc
        acc *= dims[i]
    return tuple(strides)


def weights(case: CaseDescriptor) -> list[RatVector]:
    """All N weight vectors, indexed by the coordinate order.

    A slot of exterior degree w on a size-n factor with index set S
    contributes sum_{s in S} e_s - (w/n) * (1,...,1) to that factor's block.
    """
    D = case.D
    bounds = case.block_bounds
    index_sets = slot_index_sets(case)
    dims = slot_dims(case)
    strides = coord_strides(case)
    N = case.N

    result: list[list[Fraction]] = [[Fraction(0)] * D for _ in range(N)]
    # odometer over per-slot 0-based indices, assembled via strides so the
    # coordinate order is independent of loop nesting here
    def fill(slot_pos: int, coord_base: int, partial: list[tuple[int, tuple[int, ...]]]) -> None:
        if slot_pos == len(case.slots):
            row = result[coord_base]
            for f, S in partial:
                lo, _hi = bounds[f - 1]
                n = case.factors[f - 1]
                w = len(S)
                shift = Fraction(w, n)
                for j in range(n):
                    row[lo + j] -= shift
                for s in S:
                    row[lo + s - 1] += 1
            return
        s = case.slots[slot_pos]
        for m0 in range(dims[slot_pos]):
            fill(
                slot_pos + 1,
                coord_base + strides[slot_pos] * m0,
                partial + [(s.factor, index_sets[slot_pos][m0])],
            )

    fill(0, 0, [])
    return [tuple(row) for row in result]


def inner_product(case: CaseDescriptor, a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    """Coordinatewise inner product on the D ambient coordinates.

    Blockwise it is the sum of per-factor dot products, which is invariant
    under the whole Weyl group.
    """
    if len(a) != case.D or len(b) != case.D:
        raise ValueError(f"expected vectors of length {case.D}")
    return dot(tuple(a), tuple(b))


def chamber_sort(case: CaseDescriptor, a: Sequence[Fraction]) -> RatVector:
    """Dominant chamber normal form: sort each factor block nondecreasing."""
    if len(a) != case.D:
        raise ValueError(f"expected vector of length {case.D}")
    out: list[Fraction] = []
    for lo, hi in case.block_bounds:
        out.extend(sorted(a[lo:hi]))
    return tuple(out)


def zero_vector(case: CaseDescriptor) -> RatVector:
    return (Fraction(0),) * case.D


def parse_case_config(text: str) -> CaseDescriptor:
    """Parse a JSON case config into a descriptor.

    Schema: {"label": str (optional), "factors": [n1, n2, ...],
    "slots": [{"factor": i, "kind": "standard"|"wedge2"|"wedge3"}, ...]}.
    A slot may also be given as a two-element list [factor, kind].
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed case config: {exc}") from None
    if not isinstance(doc, dict):
        raise ValueError("case config must be a JSON object")

    factors = doc.get("factors")
    if not isinstance(factors, list) or not factors:
        raise ValueError("case config needs a nonempty 'factors' list")
    if any(not isinstance(n, int) or n < 1 for n in factors):
        raise ValueError("factors must be positive integers")

    raw_slots = doc.get("slots")
    if not isinstance(raw_slots, list) or not raw_slots:
        raise ValueError("case config needs a nonempty 'slots' list")
    slots: list[Slot] = []
    for item in raw_slots:
        if isinstance(item, dict):
            f, kind = item.get("factor"), item.get("kind")
        elif isinstance(item, list) and len(item) == 2:
            f, kind = item
        else:
            raise ValueError(f"bad slot entry {item!r}")
        if kind not in KIND_DEGREE:
            raise ValueError(f"unknown slot kind {kind!r}")
        if not isinstance(f, int) or not 1 <= f <= len(factors):
            raise ValueError(f"slot factor {f!r} outside 1..{len(factors)}")
        degree = KIND_DEGREE[kind]
        if degree > factors[f - 1]:
            raise ValueError(
                f"slot kind {kind} needs factor size >= {degree}, got {factors[f - 1]}"
            )
        slots.append(Slot(f, degree))

    label = doc.get("label", "custom")
    if not isinstance(label, str) or not label:
        raise ValueError("label must be a nonempty string")
    return CaseDescriptor(label=label, factors=tuple(factors), slots=tuple(slots))


def case_config_text(case: CaseDescriptor) -> str:
    """Serialize a descriptor back to the JSON config schema."""
    doc = {
        "label": case.label,
        "factors": list(case.factors),
        "slots": [{"factor": s.factor, "kind": DEGREE_KIND[s.degree]} for s in case.slots],
    }
    return json.dumps(doc, indent=2) + "\n"
