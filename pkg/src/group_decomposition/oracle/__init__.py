"""Exhaustive enumeration on tiny instances."""

from .moments import exact_single_mean, exact_pair_mean, exact_pair_mean_numerators, ROW, COLUMN
from .enumeration import (
    ExactDistribution,
    surjections,
    exact_miss_distribution,
    exact_p,
    exact_miss_probabilities,
)

__all__ = [
    "exact_single_mean",
    "exact_pair_mean",
    "exact_pair_mean_numerators",
    "ROW",
    "COLUMN",
    "ExactDistribution",
    "surjections",
    "exact_miss_distribution",
    "exact_p",
    "exact_miss_probabilities",
]
