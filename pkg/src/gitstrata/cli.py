"""Command-line front end: compute, verify, and combinadic subcommands.

Sequencing lives here: one induced-action list per case, then per subset
size R (largest first) the sieve and the solver, then the merge and the
serializers. All file output is exact rationals; wall-clock timing goes
to the console report only, so repeated runs produce identical bytes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .beta_solver import solve_candidates
from .case_catalog import (
    BUILTIN_IDS,
    CaseDescriptor,
    builtin_case,
    parse_case_config,
)
from .combinadic import build_rank_tables, rank, unrank
from .exact_linalg import RatVector
from .golden_data import compare, load_golden
from .orbit_sieve import sieve
from .stratifier import StrataSet, dedup_and_classify
from .weyl_action import weyl_list

__all__ = [
    "RankStats",
    "RunReport",
    "run_case",
    "scale_presentation",
    "to_json",
    "to_csv",
    "to_latex",
    "main",
]


@dataclass(frozen=True)
class RankStats:
    R: int
    combinations: int
    representatives: int
    accepted: int
    sieve_seconds: float
    solve_seconds: float


@dataclass
class RunReport:
    case_label: str
    rank_stats: list[RankStats] = field(default_factory=list)
    cardinality: int = 0
    weyl_seconds: float = 0.0
    classify_seconds: float = 0.0
    out_path: str | None = None

    def render(self) -> str:
        out = [f"case {self.case_label}"]
        for s in self.rank_stats:
            out.append(
                f"  R={s.R}: combinations={s.combinations} "
                f"representatives={s.representatives} accepted={s.accepted} "
                f"(sieve {s.sieve_seconds:.2f}s, solve {s.solve_seconds:.2f}s)"
            )
        total = (
            self.weyl_seconds
            + self.classify_seconds
            + sum(s.sieve_seconds + s.solve_seconds for s in self.rank_stats)
        )
        out.append(
            f"  strata: {self.cardinality} "
            f"(weyl {self.weyl_seconds:.2f}s, merge+classify "
            f"{self.classify_seconds:.2f}s, total {total:.2f}s)"
        )
        if self.out_path:
            out.append(f"  output: {self.out_path}")
        return "\n".join(out) + "\n"


def run_case(
    case: CaseDescriptor,
    rank_range: tuple[int, int] | None = None,
    threads: int = 1,
    conformance_dedup: bool = False,
) -> tuple[StrataSet, RunReport]:
    """Full pipeline for one case; R runs from high to low over the range."""
    hi, lo = rank_range if rank_range else (case.rank, 1)
    if not 1 <= lo <= hi <= case.rank:
        raise ValueError(f"rank range {lo}..{hi} outside 1..{case.rank}")

    report = RunReport(case_label=case.label)
    t0 = time.perf_counter()
    actions = weyl_list(case)
    report.weyl_seconds = time.perf_counter() - t0

    groups = []
    for R in range(hi, lo - 1, -1):
        t1 = time.perf_counter()
        reps = sieve(case, R, actions)
        t2 = time.perf_counter()
        cands = solve_candidates(case, R, reps, threads=threads)
        t3 = time.perf_counter()
        groups.append((R, cands))
        report.rank_stats.append(
            RankStats(
                R=R,
                combinations=reps.total_combinations,
                representatives=len(reps),
                accepted=len(cands),
                sieve_seconds=t2 - t1,
                solve_seconds=t3 - t2,
            )
        )

    t4 = time.perf_counter()
    strata = dedup_and_classify(case, groups, conformance_dedup=conformance_dedup)
    report.classify_seconds = time.perf_counter() - t4
    report.cardinality = len(strata)
    return strata, report


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def scale_presentation(beta: RatVector) -> tuple[Fraction, tuple[int, ...]]:
    """Factor beta as scale * integer vector.

    The scale is g/q with q the lcm of the entry denominators and g the
    gcd of the scaled entries, so the integer vector is primitive.
    """
    q = math.lcm(*(x.denominator for x in beta))
    ints = [int(x * q) for x in beta]
    g = math.gcd(*ints)
    if g == 0:
        raise ValueError("zero vector has no scale presentation")
    return Fraction(g, q), tuple(v // g for v in ints)


def to_json(
    strata: StrataSet,
    rank_range: tuple[int, int],
    report: RunReport | None = None,
) -> str:
    case = strata.case
    if report is not None:
        per_rank = [
            {
                "R": s.R,
                "combinations": s.combinations,
                "representatives": s.representatives,
                "accepted": s.accepted,
            }
            for s in report.rank_stats
        ]
    else:
        per_rank = [
            {"R": R, "accepted": count} for R, count in strata.candidate_counts
        ]
    records = []
    for r in strata.records:
        records.append(
            {
                "beta": [_frac(x) for x in r.beta],
                "z": list(r.z_indices),
                "w": list(r.w_indices),
                "witnesses": [
                    {
                        "R": R,
                        "combination": list(comb),
                        "coeffs": [_frac(c) for c in coeffs],
                    }
                    for R, comb, coeffs in r.witnesses
                ],
            }
        )
    doc = {
        "case": case.label,
        "records": records,
        "stats": {
            "N": case.N,
            "D": case.D,
            "rank": case.rank,
            "weyl_order": case.weyl_order,
            "rank_range": [rank_range[0], rank_range[1]],
            "per_rank": per_rank,
            "cardinality": len(strata),
        },
    }
    return json.dumps(doc, indent=2) + "\n"


def to_csv(strata: StrataSet) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["index", "beta", "z", "w"])
    for i, r in enumerate(strata.records, start=1):
        writer.writerow(
            [
                i,
                " ".join(_frac(x) for x in r.beta),
                " ".join(str(j) for j in r.z_indices),
                " ".join(str(j) for j in r.w_indices),
            ]
        )
    return buf.getvalue()


def to_latex(strata: StrataSet) -> str:
    lines = [
        r"\begin{tabular}{|l|l|l|}",
        r"\hline",
        r"$\beta$ & $Z_\beta$ indices & $W_\beta$ indices \\",
        r"\hline",
    ]
    for i, r in enumerate(strata.records, start=1):
        scale, ints = scale_presentation(r.beta)
        vec = ",".join(str(v) for v in ints)
        z = ",".join(str(j) for j in r.z_indices) if r.z_indices else "-"
        w = ",".join(str(j) for j in r.w_indices) if r.w_indices else "-"
        lines.append(
            rf"$\beta_{{{i}}} = \tfrac{{{scale.numerator}}}{{{scale.denominator}}}"
            rf"({vec})$ & ${z}$ & ${w}$ \\"
        )
        lines.append(r"\hline")
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def _load_case(selector: str) -> CaseDescriptor:
    if selector in {str(i) for i in BUILTIN_IDS}:
        return builtin_case(int(selector))
    path = Path(selector)
    if not path.exists():
        raise ValueError(f"--case must be one of {BUILTIN_IDS} or a config file path")
    return parse_case_config(path.read_text())


def _parse_rank_range(text: str, case: CaseDescriptor) -> tuple[int, int]:
    a, sep, b = text.partition("..")
    if not sep:
        raise ValueError("--rank-range must look like A..B")
    try:
        x, y = int(a), int(b)
    except ValueError:
        raise ValueError("--rank-range must look like A..B with integers") from None
    hi, lo = max(x, y), min(x, y)
    if not 1 <= lo <= hi <= case.rank:
        raise ValueError(f"rank range {lo}..{hi} outside 1..{case.rank}")
    return hi, lo


def _emit(
    strata: StrataSet,
    fmt: str,
    rank_range: tuple[int, int],
    report: RunReport | None = None,
) -> str:
    if fmt == "json":
        return to_json(strata, rank_range, report)
    if fmt == "csv":
        return to_csv(strata)
    if fmt == "latex":
        return to_latex(strata)
    raise ValueError(f"unknown format {fmt!r}")


def _cmd_compute(args: argparse.Namespace) -> int:
    case = _load_case(args.case)
    rank_range = (
        _parse_rank_range(args.rank_range, case) if args.rank_range else (case.rank, 1)
    )
    strata, report = run_case(
        case,
        rank_range=rank_range,
        threads=args.threads,
        conformance_dedup=args.conformance_dedup,
    )
    text = _emit(strata, args.format, rank_range, report)

    figure_dir: Path | None = None
    stem = f"case{case.label}"
    if args.out:
        out = Path(args.out)
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text)
        report.out_path = str(out)
        if not args.no_figures:
            figure_dir = Path(args.figures) if args.figures else out.parent
            stem = out.stem
    else:
        sys.stdout.write(text)
        if args.figures and not args.no_figures:
            figure_dir = Path(args.figures)

    if figure_dir is not None:
        from .figures import render_figures

        paths = render_figures(strata, figure_dir, stem)
        report_extra = ", ".join(str(p) for p in paths)
        sys.stderr.write(f"figures: {report_extra}\n")
    sys.stderr.write(report.render())
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    case = _load_case(args.case)
    if args.golden:
        golden = load_golden(args.golden, case)
    elif args.case in {str(i) for i in BUILTIN_IDS}:
        golden = load_golden(int(args.case))
    else:
        raise ValueError("custom case configs need --golden PATH")
    strata, report = run_case(
        case, threads=args.threads, conformance_dedup=args.conformance_dedup
    )
    sys.stderr.write(report.render())
    result = compare(strata, golden)
    sys.stdout.write(result.render())
    return 0 if result.ok else 1


def _cmd_combinadic(args: argparse.Namespace) -> int:
    tables = build_rank_tables(args.N, args.R)
    if args.mode == "rank":
        try:
            c = tuple(int(t) for t in args.value.split(","))
        except ValueError:
            raise ValueError(
                "rank mode expects a comma-separated combination, e.g. 2,3"
            ) from None
        sys.stdout.write(f"{rank(c, tables)}\n")
    else:
        try:
            m = int(args.value)
        except ValueError:
            raise ValueError("unrank mode expects an integer rank, e.g. 3") from None
        c = unrank(m, tables)
        sys.stdout.write(",".join(str(i) for i in c) + "\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gitstrata",
        description="Exact stratification data for the built-in group/space cases",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--case",
            required=True,
            help=f"built-in case id {BUILTIN_IDS} or a JSON case-config path",
        )
        p.add_argument(
            "--threads",
            type=int,
            default=os.cpu_count() or 1,
            help="solver worker count (results are identical for any value)",
        )
        p.add_argument(
            "--conformance-dedup",
            action="store_true",
            help="use the quadratic pairwise dedup scan instead of hashing",
        )

    p_compute = sub.add_parser("compute", help="compute the strata of a case")
    add_common(p_compute)
    p_compute.add_argument("--rank-range", help="subset sizes to process, e.g. 7..7")
    p_compute.add_argument(
        "--format", choices=["json", "latex", "csv"], default="json"
    )
    p_compute.add_argument("--out", help="output file (default: stdout)")
    p_compute.add_argument(
        "--figures",
        help="directory for summary figures (default: next to --out)",
    )
    p_compute.add_argument(
        "--no-figures", action="store_true", help="skip figure rendering"
    )
    p_compute.set_defaults(func=_cmd_compute)

    p_verify = sub.add_parser(
        "verify", help="recompute a case and compare against a golden table"
    )
    add_common(p_verify)
    p_verify.add_argument("--golden", help="golden table path (default: packaged)")
    p_verify.set_defaults(func=_cmd_verify)

    p_comb = sub.add_parser("combinadic", help="rank/unrank combinations")
    p_comb.add_argument("mode", choices=["rank", "unrank"])
    p_comb.add_argument("--N", type=int, required=True)
    p_comb.add_argument("--R", type=int, required=True)
    p_comb.add_argument("value", help="combination c1,c2,... or rank integer")
    p_comb.set_defaults(func=_cmd_combinadic)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except MemoryError as exc:
        sys.stderr.write(f"error: out of memory: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
