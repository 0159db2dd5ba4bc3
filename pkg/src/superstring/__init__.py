"""Approximate shortest common superstrings for sets of equal-length strings."""

from superstring.core import (
    Instance,
    SuperstringSolution,
    is_superstring,
    max_overlap,
    naive_concat,
    validate_instance,
)
from superstring.hierarchy import solve_gamma, solve_hierarchical, solve_tau
from superstring.oracles import greedy_scs, heldkarp_opt

__all__ = [
    "Instance",
    "SuperstringSolution",
    "greedy_scs",
    "heldkarp_opt",
    "is_superstring",
    "max_overlap",
    "naive_concat",
    "solve_gamma",
    "solve_hierarchical",
    "solve_tau",
    "validate_instance",
]
