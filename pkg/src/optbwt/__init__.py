"""Multidollar BWT of string collections, its SAP-array, and the reordering
of input strings that minimizes the number of equal-letter runs."""

from .collection import (
    COLEX,
    INPUT,
    LEX,
    CollectionError,
    Ordering,
    StringCollection,
    parse,
    read_collection,
    reorder,
    to_fasta,
    to_lines,
)
from .optimizer import ParikhVector, RunStats, count_runs, optimize, sap_heuristic, tuples_from_sap
from .oracle import (
    ComparisonReport,
    InvalidBWT,
    brute_force_min_runs,
    compare,
    generate,
    invert_bwt,
    random_reference,
    sample_reads,
    variants,
)
from .sap import SapArray, SapInterval, build_sap, intervals, reduce_sap
from .suffix_engine import SuffixArray, build_bwt, build_suffix_array, extract_bwt, format_rle

__all__ = [
    "COLEX", "INPUT", "LEX", "CollectionError", "Ordering", "StringCollection", "parse",
    "read_collection", "reorder", "to_fasta", "to_lines", "ParikhVector", "RunStats",
    "count_runs", "optimize", "sap_heuristic", "tuples_from_sap", "ComparisonReport",
    "InvalidBWT", "brute_force_min_runs", "compare", "generate", "invert_bwt",
    "random_reference", "sample_reads", "variants", "SapArray", "SapInterval", "build_sap",
    "intervals", "reduce_sap", "SuffixArray", "build_bwt", "build_suffix_array",
    "extract_bwt", "format_rle",
]
