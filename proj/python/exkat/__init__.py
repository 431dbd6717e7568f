"""Exact Grothendieck-group computations on finite extriangulated tables."""

from ._exkat import (
    ExkatError,
    Table,
    cluster_a,
    pentagon,
    load_table,
    triangulations,
    snf,
    k0,
    index,
    index_vectors,
    comparison_check,
    exactness_check,
    fedele_check,
    higher_k0_check,
    run_suite,
    suite_names,
    __version__,
)

__all__ = [
    "ExkatError",
    "Table",
    "cluster_a",
    "pentagon",
    "load_table",
    "triangulations",
    "snf",
    "k0",
    "index",
    "index_vectors",
    "comparison_check",
    "exactness_check",
    "fedele_check",
    "higher_k0_check",
    "run_suite",
    "suite_names",
    "__version__",
]
