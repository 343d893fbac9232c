"""Exact rational scalars, vectors, matrices, and reduced row echelon form.

All arithmetic is over arbitrary-precision rationals; no floating point
anywhere. Vectors and matrices are immutable tuples so they can be shared
freely across workers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction
RatVector = tuple[Fraction, ...]
RatMatrix = tuple[tuple[Fraction, ...], ...]

__all__ = [
    "Rational",
    "RatVector",
    "RatMatrix",
    "rat",
    "vector",
    "matrix",
    "dot",
    "rref",
]


def rat(num: int, den: int = 1) -> Fraction:
    """Canonical reduced rational num/den. Zero denominator is an error."""
    if den == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fraction(num, den)


def vector(entries: Iterable) -> RatVector:
    return tuple(Fraction(e) for e in entries)


def matrix(rows: Iterable[Iterable]) -> RatMatrix:
    out = tuple(tuple(Fraction(e) for e in row) for row in rows)
    if out and any(len(row) != len(out[0]) for row in out):
        raise ValueError("ragged matrix")
    return out


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    """Exact inner product sum(a[i]*b[i])."""
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    total = Fraction(0)
    for x, y in zip(a, b):
        total += x * y
    return total


def rref(m: Sequence[Sequence[Fraction]]) -> RatMatrix:
    """Reduced row echelon form over the rationals.

    Pivot choice is the first nonzero entry in column order; over exact
    rationals no magnitude pivoting is needed and the result is the unique
    RREF of the input. The input is not modified.
    """
    if not m:
        raise ValueError("empty matrix")
    work = [list(row) for row in m]
    nrows = len(work)
    ncols = len(work[0])
    if any(len(row) != ncols for row in work):
        raise ValueError("ragged matrix")

    pivot_row = 0
    for col in range(ncols):
        pivot = None
        for r in range(pivot_row, nrows):
            if work[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        if pivot != pivot_row:
            work[pivot_row], work[pivot] = work[pivot], work[pivot_row]
        pv = work[pivot_row][col]
        if pv != 1:
            inv = 1 / pv
            work[pivot_row] = [x * inv for x in work[pivot_row]]
        prow = work[pivot_row]
        for r in range(nrows):
            if r != pivot_row and work[r][col] != 0:
                f = work[r][col]
                row = work[r]
                work[r] = [x - f * y for x, y in zip(row, prow)]
        pivot_row += 1
        if pivot_row == nrows:
            break
    return tuple(tuple(row) for row in work)
