"""
Suen's inequality for the product indicators.

For indicators X_i with dependency graph Gamma and S = sum X_i:

    Delta  = 1/2 sum_i sum_{j~i} E[X_i X_j]   prod_{l ~ {i,j}} (1 - E[X_l])^-1
    Delta* = 1/2 sum_i sum_{j~i} E[X_i] E[X_j] prod_{l ~ {i,j}} (1 - E[X_l])^-1

    e^Delta prod(1 - E[X_i]) >= Pr[S = 0] >= (1 - Delta* e^Delta) prod(1 - E[X_i])

Moments are exact; Delta, Delta* and the bounds are floats.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, NamedTuple, Optional

import numpy as np

from ..exceptions import InputError
from ..structure import CentralizerProfile
from ..theta import require_theta_domain
from .dependency import DependencyGraph, neighborhood_counts
from .moments import IndicatorMoments, indicator_moments

logger = logging.getLogger(__name__)


class SuenBounds(NamedTuple):
    delta: float
    delta_star: float
    upper: float
    lower: float


@dataclass(frozen=True)
class SuenReport:
    """Suen quantities for Pr[x in S] with subsets of k draws."""
    delta: float
    delta_star: float
    upper: float
    lower: float
    baseline: float
    moments: Optional[IndicatorMoments] = field(default=None, compare=False)
    element: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        data = {
            "element": self.element,
            "delta": self.delta,
            "delta_star": self.delta_star,
            "upper": self.upper,
            "lower": self.lower,
            "baseline": self.baseline,
        }
        if self.moments is not None:
            data["moments"] = self.moments.to_dict()
        return data


def delta_cap(n: int, k: int) -> float:
    """Numeric cap on Delta and Delta* for one element: 4 k^3/n^2 exp(6k/(n-2))."""
    with np.errstate(over="ignore"):
        return float(4.0 * k ** 3 / n ** 2 * np.exp(6.0 * k / (n - 2)))


def suen_from_log(delta, delta_star, log_baseline):
    """
    Upper and lower bounds from Delta, Delta* and log prod(1 - E[X_i]).

    Everything stays in log space, so a huge Delta against a vanishing
    baseline gives upper = 1 and lower = 0 instead of inf * 0. Both bounds
    are clipped to [0, 1]. Works elementwise on arrays.

    Returns:
        (upper, lower) as float64 arrays shaped like the inputs
    """
    delta = np.asarray(delta, dtype=np.float64)
    delta_star = np.asarray(delta_star, dtype=np.float64)
    log_baseline = np.asarray(log_baseline, dtype=np.float64)
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        upper = np.exp(np.minimum(delta + log_baseline, 0.0))
        # log(Delta* e^Delta); the lower bound vanishes once it reaches 0
        log_excess = np.where(delta_star > 0.0, np.log(delta_star) + delta, -np.inf)
        lower = -np.expm1(np.minimum(log_excess, 0.0)) * np.exp(log_baseline)
    lower = np.where(log_excess >= 0.0, 0.0, lower)
    return upper, np.clip(lower, 0.0, 1.0)


def _point_bounds(n: int, sizes: np.ndarray, k: int) -> Dict[str, np.ndarray]:
    """Closed-form Suen quantities for elements with centralizer sizes `sizes`."""
    sizes = np.asarray(sizes, dtype=np.float64)
    s = (2.0 * n - sizes) / n ** 2
    pm = (4.0 * n - 3.0 * sizes) / n ** 3
    degree, closed = neighborhood_counts(k)
    log_q = np.log1p(-s)
    edges_half_sum = 0.5 * k * k * degree
    with np.errstate(over="ignore"):
        # product over the pair neighborhood, in log space
        inflation = np.exp(-closed * log_q)
        delta = edges_half_sum * pm * inflation
        delta_star = edges_half_sum * s * s * inflation
    log_baseline = k * k * log_q
    upper, lower = suen_from_log(delta, delta_star, log_baseline)
    baseline = np.exp(log_baseline)
    return {"delta": delta, "delta_star": delta_star, "baseline": baseline, "upper": upper, "lower": lower}


def _require_k(k: int) -> None:
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")


def suen_point(p: CentralizerProfile, x: int, k: int) -> SuenReport:
    """
    Bounds on Pr[x not in AB ∪ BA] for k draws each.

    For k = 1 there are no adjacent pairs, Delta = Delta* = 0 and both bounds
    equal the independent product.

    Args:
        p: Centralizer profile with n >= 3
        x: Element index
        k: Draw count, at least 1

    Returns:
        SuenReport with exact moments attached
    """
    require_theta_domain(p)
    _require_k(k)
    moments = indicator_moments(p, x, k)
    values = _point_bounds(p.order, np.array([p.centralizer_size(x)]), k)
    return SuenReport(
        delta=float(values["delta"][0]),
        delta_star=float(values["delta_star"][0]),
        upper=float(values["upper"][0]),
        lower=float(values["lower"][0]),
        baseline=float(values["baseline"][0]),
        moments=moments,
        element=x,
    )


def suen_generic(graph: DependencyGraph, means: np.ndarray, pair_means: np.ndarray) -> SuenBounds:
    """
    Suen quantities by direct summation over a dependency graph.

    Args:
        graph: Dependency graph of the indicators
        means: E[X_i] per vertex, each in [0, 1)
        pair_means: E[X_i X_j] per edge, aligned with graph.edges

    Returns:
        SuenBounds(delta, delta_star, upper, lower)
    """
    means = np.asarray(means, dtype=np.float64)
    pair_means = np.asarray(pair_means, dtype=np.float64)
    if means.shape != (graph.vertex_count,):
        raise InputError(f"expected {graph.vertex_count} means, got shape {means.shape}")
    if pair_means.shape != (graph.edge_count,):
        raise InputError(f"expected {graph.edge_count} pair means, got shape {pair_means.shape}")
    if np.any(means < 0) or np.any(means >= 1):
        raise InputError("every mean must lie in [0, 1)")

    log_q = np.log1p(-means)
    delta = 0.0
    delta_star = 0.0
    if graph.edge_count:
        adjacency = graph.adjacency()
        i, j = graph.edges[:, 0], graph.edges[:, 1]
        neighborhood = adjacency[i] | adjacency[j]
        with np.errstate(over="ignore"):
            inflation = np.exp(-(neighborhood.astype(np.float64) @ log_q))
            # each undirected edge appears twice in the double sum, halved
            delta = float(np.sum(pair_means * inflation))
            delta_star = float(np.sum(means[i] * means[j] * inflation))
    upper, lower = suen_from_log(delta, delta_star, float(log_q.sum()))
    return SuenBounds(delta=delta, delta_star=delta_star, upper=float(upper), lower=float(lower))


def miss_expectation_upper(p: CentralizerProfile, k: int) -> float:
    """
    Upper bound on E|S|, hence on Pr[AB ∪ BA != G] by Markov.

    Sum over x of min(1, e^Delta(x) (1 - E[I_v(x)])^{k^2}), grouped by centralizer size.
    """
    require_theta_domain(p)
    _require_k(k)
    sizes, counts = p.size_multiset()
    values = _point_bounds(p.order, sizes, k)
    total = float(np.sum(counts * values["upper"]))
    logger.debug(f"E|S| <= {total:.6g} for n={p.order}, k={k}")
    return total
