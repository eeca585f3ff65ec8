"""
group_decomposition - random subsets decomposing a finite group.

Computes the group invariant theta, the exact indicator moments and
correlation-inequality bounds for the miss set of AB ∪ BA, and locates the
phase transition for random decompositions by simulation, with exhaustive
enumeration on tiny instances as ground truth.
"""

__version__ = "0.1.0"
__author__ = "group_decomposition maintainers"

from .groups import (
    FiniteGroup,
    build_cyclic,
    build_dihedral,
    build_symmetric,
    build_product,
    load_table,
    parse_group_spec,
)
from .structure import CentralizerProfile, profile, commute_probability
from .theta import solve_theta, theta_bounds, critical_size
from .suen import suen_point, suen_generic, miss_expectation_upper
from .montecarlo import estimate_p, sweep, miss_stats

__all__ = [
    "FiniteGroup",
    "build_cyclic",
    "build_dihedral",
    "build_symmetric",
    "build_product",
    "load_table",
    "parse_group_spec",
    "CentralizerProfile",
    "profile",
    "commute_probability",
    "solve_theta",
    "theta_bounds",
    "critical_size",
    "suen_point",
    "suen_generic",
    "miss_expectation_upper",
    "estimate_p",
    "sweep",
    "miss_stats",
]
