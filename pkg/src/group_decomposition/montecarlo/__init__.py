"""Simulation of random decompositions and the empirical phase transition."""

from .plans import Variant, TrialPlan
from .sampling import draw_subset, product_union, miss_count
from .statistics import wilson_interval, standard_error, smooth_monotone, find_crossing
from .estimator import (
    SweepPoint,
    SweepCurve,
    MissStats,
    b_draws_for,
    run_trials,
    estimate_p,
    critical_prediction,
    sweep,
    window_sweep,
    adaptive_crossing,
    miss_stats,
)

__all__ = [
    "Variant",
    "TrialPlan",
    "draw_subset",
    "product_union",
    "miss_count",
    "wilson_interval",
    "standard_error",
    "smooth_monotone",
    "find_crossing",
    "SweepPoint",
    "SweepCurve",
    "MissStats",
    "b_draws_for",
    "run_trials",
    "estimate_p",
    "critical_prediction",
    "sweep",
    "window_sweep",
    "adaptive_crossing",
    "miss_stats",
]
