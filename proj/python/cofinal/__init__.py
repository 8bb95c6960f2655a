"""Workbench for pair partitions over finite-set lattices.

The heavy lifting lives in the compiled extension; results come back as
plain dicts and lists mirroring the JSON schemas used by the command-line
tool.
"""

from ._core import (
    SCHEMA,
    __version__,
    brute_max_homogeneous,
    build_approximation,
    canonicalize,
    char_width,
    countable_cofinal_homogeneous,
    derive_f_h_a,
    dominates,
    enumerate_total_colorings,
    eval_pair,
    extend_approximation,
    extract_end_homogeneous,
    extract_homogeneous,
    induced_total_coloring,
    is_a_extension,
    is_f_correct,
    is_good_bounded,
    is_proper_subset,
    laver_build,
    laver_complete,
    laver_verify,
    lemma22_search,
    lemma23_search,
    pair_le,
    sweep_colorings,
    verify_approximation,
)

__all__ = [
    "SCHEMA",
    "__version__",
    "brute_max_homogeneous",
    "build_approximation",
    "canonicalize",
    "char_width",
    "countable_cofinal_homogeneous",
    "derive_f_h_a",
    "dominates",
    "enumerate_total_colorings",
    "eval_pair",
    "extend_approximation",
    "extract_end_homogeneous",
    "extract_homogeneous",
    "induced_total_coloring",
    "is_a_extension",
    "is_f_correct",
    "is_good_bounded",
    "is_proper_subset",
    "laver_build",
    "laver_complete",
    "laver_verify",
    "lemma22_search",
    "lemma23_search",
    "pair_le",
    "sweep_colorings",
    "verify_approximation",
]
