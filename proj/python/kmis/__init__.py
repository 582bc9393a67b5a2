"""Pattern matching with mismatches under Hamming distance."""

try:
    from ._kmis import (
        abrahamson_profile,
        approx_count,
        encode,
        knapsack_k_mismatches,
        las_vegas_k_mismatches,
        naive_profile,
        one_mismatch,
        subset_k_mismatches,
        wildcard_profile,
    )
except ImportError:  # built extension on the path, e.g. a cmake build tree
    from _kmis import (
        abrahamson_profile,
        approx_count,
        encode,
        knapsack_k_mismatches,
        las_vegas_k_mismatches,
        naive_profile,
        one_mismatch,
        subset_k_mismatches,
        wildcard_profile,
    )

__all__ = [
    "abrahamson_profile",
    "approx_count",
    "encode",
    "knapsack_k_mismatches",
    "las_vegas_k_mismatches",
    "naive_profile",
    "one_mismatch",
    "subset_k_mismatches",
    "wildcard_profile",
]

__version__ = "0.1.0"
