"""Closest-point candidates for representative weight subsets.

For a subset {gamma_{j_1}, ..., gamma_{j_R}} the affine span's closest
point to the origin is beta' = sum c_k gamma_{j_k} where the c_k solve

    row 1:        sum_k c_k = 1
    rows k=2..R:  (gamma_{j_k} - gamma_{j_1}, beta')* = 0

A subset is kept only when the system is nonsingular and every c_k is
strictly positive (beta' interior to the simplex); boundary solutions
reappear for a smaller subset, so dropping them loses nothing. The kept
point is then block-sorted into the dominant chamber.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .case_catalog import CaseDescriptor, chamber_sort, inner_product, weights
from .combinadic import Combination
from .exact_linalg import RatMatrix, RatVector, rref
from .orbit_sieve import RepresentativeSet

__all__ = [
    "BetaCandidate",
    "gram_matrix",
    "build_closest_matrix",
    "beta_coefficient",
    "solve_candidates",
]


@dataclass(frozen=True)
class BetaCandidate:
    """An accepted closest point with its witness subset and coefficients."""

    beta_raw: RatVector
    beta: RatVector
    coeffs: tuple[Fraction, ...]
    witness: Combination
    R: int


@lru_cache(maxsize=None)
def _case_weights(case: CaseDescriptor) -> tuple[RatVector, ...]:
    return tuple(weights(case))


@lru_cache(maxsize=None)
def gram_matrix(case: CaseDescriptor) -> tuple[tuple[Fraction, ...], ...]:
    """All pairwise inner products (gamma_i, gamma_j)*, 0-based indexing."""
    W = _case_weights(case)
    N = len(W)
    G: list[list[Fraction]] = [[Fraction(0)] * N for _ in range(N)]
    for i in range(N):
        for j in range(i, N):
            v = inner_product(case, W[i], W[j])
            G[i][j] = v
            G[j][i] = v
    return tuple(tuple(row) for row in G)


def build_closest_matrix(case: CaseDescriptor, witness: Combination) -> RatMatrix:
    """The R x (R+1) augmented system matrix for a witness subset."""
    G = gram_matrix(case)
    R = len(witness)
    j = [w - 1 for w in witness]
    rows: list[list[Fraction]] = [[Fraction(1)] * R + [Fraction(1)]]
    for k in range(1, R):
        row = [G[j[k]][j[l]] - G[j[0]][j[l]] for l in range(R)]
        row.append(Fraction(0))
        rows.append(row)
    return tuple(tuple(r) for r in rows)


def beta_coefficient(case: CaseDescriptor, witness: Combination) -> tuple[Fraction, ...] | None:
    """Coefficients c solving the closest-point system, or None if singular.

    Nonsingularity reads off the reduced row echelon form: the system has a
    unique solution iff the (R,R) entry of the RREF is 1, in which case the
    last column is that solution.
    """
    m = rref(build_closest_matrix(case, witness))
    R = len(witness)
    if m[R - 1][R - 1] != 1:
        return None
    return tuple(row[R] for row in m)


def _accept(case: CaseDescriptor, witness: Combination) -> BetaCandidate | None:
    coeffs = beta_coefficient(case, witness)
    if coeffs is None or any(c <= 0 for c in coeffs):
        return None
    W = _case_weights(case)
    D = case.D
    raw = [Fraction(0)] * D
    for c, j in zip(coeffs, witness):
        g = W[j - 1]
        for d in range(D):
            raw[d] += c * g[d]
    beta_raw = tuple(raw)
    return BetaCandidate(
        beta_raw=beta_raw,
        beta=chamber_sort(case, beta_raw),
        coeffs=coeffs,
        witness=witness,
        R=len(witness),
    )


def solve_candidates(
    case: CaseDescriptor,
    R: int,
    reps: RepresentativeSet,
    threads: int = 1,
) -> list[BetaCandidate]:
    """Accepted candidates for every representative, in representative order.

    The per-representative work is independent; with threads > 1 it runs as
    a parallel map whose results are collected in input order, so output is
    identical for every thread count.
    """
    if R != reps.R:
        raise ValueError(f"rank mismatch: R={R} but representatives built for R={reps.R}")
    gram_matrix(case)  # build shared tables before fanning out
    if threads > 1 and len(reps.reps) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunk = max(1, len(reps.reps) // (threads * 8))
            results = pool.map(lambda w: _accept(case, w), reps.reps, chunksize=chunk)
            return [r for r in results if r is not None]
    return [r for r in (_accept(case, w) for w in reps.reps) if r is not None]
