"""Exact indicator moments and Suen-inequality bounds for the miss set."""

from .moments import IndicatorMoments, single_mean, pair_mean, shared_vertex_mean, indicator_moments
from .dependency import DependencyGraph, neighborhood_counts, build_gamma, build_doubled_gamma
from .inequality import SuenReport, SuenBounds, delta_cap, suen_point, suen_generic, miss_expectation_upper
from .second_moment import (
    PairSuenReport,
    FailureBounds,
    pair_delta_cap,
    suen_pair,
    decomposition_failure_lower,
)

__all__ = [
    "IndicatorMoments",
    "single_mean",
    "pair_mean",
    "shared_vertex_mean",
    "indicator_moments",
    "DependencyGraph",
    "neighborhood_counts",
    "build_gamma",
    "build_doubled_gamma",
    "SuenReport",
    "SuenBounds",
    "delta_cap",
    "suen_point",
    "suen_generic",
    "miss_expectation_upper",
    "PairSuenReport",
    "FailureBounds",
    "pair_delta_cap",
    "suen_pair",
    "decomposition_failure_lower",
]
