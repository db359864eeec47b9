"""Greedy independent sets and peeling explorations of uniform Cayley trees.

Trees are parent lists: ``parents[i]`` is the parent of vertex ``i + 1`` in
the tree on ``len(parents) + 1`` vertices rooted at the largest label.
"""

from ._core import (
    DEFAULT_SEED,
    InvalidArgument,
    centered_covariance,
    clt_experiment,
    count_containing_trees,
    exact_law,
    fluid_constants,
    greedy_peeling,
    greedy_reference,
    max_independent_set,
    prufer_decode,
    prufer_encode,
    sample_tree,
    simulate_chain,
    verify_symmetry_exact,
)

__all__ = [
    "DEFAULT_SEED",
    "InvalidArgument",
    "centered_covariance",
    "clt_experiment",
    "count_containing_trees",
    "exact_law",
    "fluid_constants",
    "greedy_peeling",
    "greedy_reference",
    "max_independent_set",
    "prufer_decode",
    "prufer_encode",
    "sample_tree",
    "simulate_chain",
    "verify_symmetry_exact",
]
