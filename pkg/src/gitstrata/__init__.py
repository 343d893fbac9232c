"""Exact instability-stratification data for representations of GL products.

The package computes, in exact rational arithmetic, the finite set of
chamber-canonical vectors indexing the instability strata of a
representation built from standard and exterior-power slots of general
linear groups, together with the coordinate index sets attached to each
vector. Four built-in cases are provided; arbitrary cases of the same
shape can be described by a small JSON config.
"""

from .case_catalog import (
    BUILTIN_IDS,
    CaseDescriptor,
    Slot,
    builtin_case,
    case_config_text,
    chamber_sort,
    inner_product,
    parse_case_config,
    weights,
)
from .cli import RankStats, RunReport, run_case, to_csv, to_json, to_latex
from .golden_data import ComparisonReport, GoldenTable, compare, load_golden
from .stratifier import StrataSet, StratumRecord

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_IDS",
    "CaseDescriptor",
    "ComparisonReport",
    "GoldenTable",
    "RankStats",
    "RunReport",
    "Slot",
    "StrataSet",
    "StratumRecord",
    "builtin_case",
    "case_config_text",
    "chamber_sort",
    "compare",
    "inner_product",
    "load_golden",
    "parse_case_config",
    "run_case",
    "to_csv",
    "to_json",
    "to_latex",
    "weights",
    "__version__",
]
