"""Reference tables of expected strata and set-level comparison.

The packaged data files hold one table per built-in case in a line
oriented format (grammar in the README):

    case <label>
    dim <D>
    rows <count>
    row <index> <p>/<q> <v_1> ... <v_D> z <list> w <list>

where beta = (p/q) * (v_1, ..., v_D) exactly and <list> is either "-"
(empty) or comma-separated 1-based coordinate indices. Loading validates
structure: row count against the header, each beta nonzero, block-sorted,
with per-block sum zero, z/w disjoint, and betas pairwise distinct.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .case_catalog import CaseDescriptor, builtin_case
from .exact_linalg import RatVector
from .stratifier import StrataSet

__all__ = ["GoldenRow", "GoldenTable", "ComparisonReport", "load_golden", "compare"]


@dataclass(frozen=True)
class GoldenRow:
    index: int
    scale: Fraction
    integer_vector: tuple[int, ...]
    z_indices: tuple[int, ...]
    w_indices: tuple[int, ...]

    @property
    def beta(self) -> RatVector:
        return tuple(self.scale * v for v in self.integer_vector)


@dataclass(frozen=True)
class GoldenTable:
    label: str
    dim: int
    rows: tuple[GoldenRow, ...]

    def triples(self) -> set[tuple[RatVector, tuple[int, ...], tuple[int, ...]]]:
        return {(r.beta, r.z_indices, r.w_indices) for r in self.rows}


def _parse_list(token: str, where: str) -> tuple[int, ...]:
    if token == "-":
        return ()
    try:
        return tuple(int(t) for t in token.split(","))
    except ValueError:
        raise ValueError(f"{where}: bad index list {token!r}") from None


def _parse(text: str, source: str) -> GoldenTable:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) < 3:
        raise ValueError(f"{source}: truncated header")
    head = [ln.split() for ln in lines[:3]]
    if head[0][0] != "case" or head[1][0] != "dim" or head[2][0] != "rows":
        raise ValueError(f"{source}: malformed header")
    label = head[0][1]
    dim = int(head[1][1])
    count = int(head[2][1])

    rows: list[GoldenRow] = []
    for ln in lines[3:]:
        t = ln.split()
        where = f"{source}: row {t[1] if len(t) > 1 else '?'}"
        if t[0] != "row" or len(t) != 3 + dim + 4:
            raise ValueError(f"{where}: malformed row line")
        index = int(t[1])
        num, _, den = t[2].partition("/")
        scale = Fraction(int(num), int(den or "1"))
        vec = tuple(int(x) for x in t[3 : 3 + dim])
        if t[3 + dim] != "z" or t[5 + dim] != "w":
            raise ValueError(f"{where}: expected z/w markers")
        z = _parse_list(t[4 + dim], where)
        w = _parse_list(t[6 + dim], where)
        rows.append(GoldenRow(index, scale, vec, z, w))

    if len(rows) != count:
        raise ValueError(f"{source}: header declares {count} rows, found {len(rows)}")
    return GoldenTable(label=label, dim=dim, rows=tuple(rows))


def _validate(table: GoldenTable, case: CaseDescriptor, source: str) -> None:
    if table.dim != case.D:
        raise ValueError(f"{source}: dim {table.dim} but case has D={case.D}")
    seen: set[RatVector] = set()
    for r in table.rows:
        where = f"{source}: row {r.index}"
        beta = r.beta
        if all(x == 0 for x in beta):
            raise ValueError(f"{where}: zero beta")
        for lo, hi in case.block_bounds:
            block = beta[lo:hi]
            if list(block) != sorted(block):
                raise ValueError(f"{where}: block {block} not sorted")
            if sum(block) != 0:
                raise ValueError(f"{where}: block {block} sums to {sum(block)}")
        if set(r.z_indices) & set(r.w_indices):
            raise ValueError(f"{where}: z and w overlap")
        for i in r.z_indices + r.w_indices:
            if not 1 <= i <= case.N:
                raise ValueError(f"{where}: index {i} outside 1..{case.N}")
        if beta in seen:
            raise ValueError(f"{where}: duplicate beta")
        seen.add(beta)


def load_golden(source: int | str | Path, case: CaseDescriptor | None = None) -> GoldenTable:
    """Load a golden table from a built-in case id (1..4) or a file path.

    When the descriptor is known (always, for built-in ids) the table is
    structurally validated against it.
    """
    if isinstance(source, int) or (isinstance(source, str) and source in "1234"):
        cid = int(source)
        case = case or builtin_case(cid)
        text = (resources.files("gitstrata") / "data" / f"case{cid}.golden").read_text()
        name = f"case{cid}.golden"
    else:
        path = Path(source)
        text = path.read_text()
        name = str(path)
    table = _parse(text, name)
    if case is not None:
        _validate(table, case, name)
    return table


@dataclass(frozen=True)
class ComparisonReport:
    """Set-level differences between computed strata and a golden table."""

    missing: tuple[GoldenRow, ...]        # in golden, absent from computed
    extra: tuple[tuple[RatVector, tuple[int, ...], tuple[int, ...]], ...]
    mismatched: tuple[tuple[GoldenRow, tuple[int, ...], tuple[int, ...]], ...]
    # mismatched rows pair a golden row with the computed (z, w) for its beta

    @property
    def ok(self) -> bool:
        return not (self.missing or self.extra or self.mismatched)

    def render(self) -> str:
        if self.ok:
            return "golden comparison: PASS\n"
        out = ["golden comparison: FAIL"]
        for r in self.missing:
            out.append(f"  missing: golden row {r.index} beta={_fmt_beta(r.beta)}")
        for beta, z, w in self.extra:
            out.append(f"  extra: computed beta={_fmt_beta(beta)} z={list(z)} w={list(w)}")
        for r, z, w in self.mismatched:
            out.append(
                f"  classification mismatch at golden row {r.index}: "
                f"golden z={list(r.z_indices)} w={list(r.w_indices)}, "
                f"computed z={list(z)} w={list(w)}"
            )
        return "\n".join(out) + "\n"


def _fmt_beta(beta: RatVector) -> str:
    return "(" + ",".join(str(x) for x in beta) + ")"


def compare(computed: StrataSet, golden: GoldenTable) -> ComparisonReport:
    """Compare on (beta, z, w) triples, order-insensitively."""
    comp_by_beta = {r.beta: (r.z_indices, r.w_indices) for r in computed.records}
    golden_betas = {r.beta for r in golden.rows}

    missing: list[GoldenRow] = []
    mismatched: list[tuple[GoldenRow, tuple[int, ...], tuple[int, ...]]] = []
    for row in golden.rows:
        got = comp_by_beta.get(row.beta)
        if got is None:
            missing.append(row)
        elif got != (row.z_indices, row.w_indices):
            mismatched.append((row, got[0], got[1]))
    extra = [
        (r.beta, r.z_indices, r.w_indices)
        for r in computed.records
        if r.beta not in golden_betas
    ]
    return ComparisonReport(
        missing=tuple(missing), extra=tuple(extra), mismatched=tuple(mismatched)
    )
