"""Merge candidates across subset sizes into the final stratification data.

Candidates arrive grouped by R in processing order (largest R first, R=1
last). The first occurrence of each distinct beta survives, the zero
vector is discarded, and every coordinate index j is classified against
each surviving beta by comparing k = (beta, gamma_j)* with l = (beta,
beta)*: strictly greater puts j in the W set, equality in the Z set,
strictly less in neither.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .beta_solver import BetaCandidate, _case_weights
from .case_catalog import CaseDescriptor, inner_product, zero_vector
from .combinadic import Combination
from .exact_linalg import RatVector

__all__ = ["StratumRecord", "StrataSet", "veq", "dedup_and_classify"]

Witness = tuple[int, Combination, tuple[Fraction, ...]]


@dataclass(frozen=True)
class StratumRecord:
    beta: RatVector
    z_indices: tuple[int, ...]
    w_indices: tuple[int, ...]
    witnesses: tuple[Witness, ...]


@dataclass(frozen=True)
class StrataSet:
    case: CaseDescriptor
    records: tuple[StratumRecord, ...]
    candidate_counts: tuple[tuple[int, int], ...]  # (R, accepted candidates)

    def __len__(self) -> int:
        return len(self.records)


def veq(a: RatVector, b: RatVector) -> bool:
    """Exact componentwise equality of equal-length rational vectors."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    return all(x == y for x, y in zip(a, b))


def _classify(case: CaseDescriptor, beta: RatVector) -> tuple[tuple[int, ...], tuple[int, ...]]:
    W = _case_weights(case)
    l = inner_product(case, beta, beta)
    z: list[int] = []
    w: list[int] = []
    for j, gamma in enumerate(W, start=1):
        k = inner_product(case, beta, gamma)
        if k > l:
            w.append(j)
        elif k == l:
            z.append(j)
    return tuple(z), tuple(w)


def dedup_and_classify(
    case: CaseDescriptor,
    groups: Sequence[tuple[int, Sequence[BetaCandidate]]],
    conformance_dedup: bool = False,
) -> StrataSet:
    """First-occurrence dedup over exact beta equality, then classification.

    The default dedup keys a dict on the beta tuple: rationals are kept in
    canonical reduced form, so hashing plus equality-on-collision is exact.
    conformance_dedup switches to a pairwise linear scan with veq; both
    keep the same (first) occurrence, so outputs are identical.
    """
    zero = zero_vector(case)
    order: list[RatVector] = []
    witnesses: dict[RatVector, list[Witness]] = {}

    if conformance_dedup:
        def find(beta: RatVector) -> bool:
            return any(veq(beta, seen) for seen in order)
    else:
        def find(beta: RatVector) -> bool:
            return beta in witnesses

    for _R, cands in groups:
        for cand in cands:
            if veq(cand.beta, zero):
                continue
            if not find(cand.beta):
                order.append(cand.beta)
                witnesses[cand.beta] = []
            witnesses[cand.beta].append((cand.R, cand.witness, cand.coeffs))

    records = []
    for beta in order:
        z, w = _classify(case, beta)
        records.append(
            StratumRecord(beta=beta, z_indices=z, w_indices=w, witnesses=tuple(witnesses[beta]))
        )
    counts = tuple((R, len(cands)) for R, cands in groups)
    return StrataSet(case=case, records=tuple(records), candidate_counts=counts)
