"""
Two-element miss bounds and the second-moment bound on decomposition failure.

Pr[x, y in S] is bounded with Suen's inequality on the doubled graph over
[k] x [k] x {x, y}. Together with the single-element bounds this gives

    (E|S|)^2 / E|S|^2 <= Pr[|S| >= 1] <= E|S|
"""

import logging
import math
from dataclasses import dataclass, asdict
from typing import Any, Dict

import numpy as np

from config.settings import settings
from ..exceptions import InputError, InstanceTooLargeError
from ..structure import CentralizerProfile
from ..theta import require_theta_domain
from .dependency import neighborhood_counts
from .inequality import _point_bounds, _require_k, suen_from_log
from .moments import pair_mean, shared_vertex_mean, single_mean

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PairSuenReport:
    """Suen quantities for Pr[x in S and y in S]."""
    x: int
    y: int
    k: int
    delta: float
    delta_star: float
    upper: float
    lower: float
    baseline: float

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return asdict(self)


@dataclass(frozen=True)
class FailureBounds:
    """Bounds on Pr[AB ∪ BA != G] for subsets of k draws."""
    k: int
    lower: float
    upper: float
    expected_miss_lower: float
    expected_miss_upper: float
    second_moment_upper: float

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return asdict(self)


def pair_delta_cap(n: int, k: int) -> float:
    """Numeric cap on the doubled-graph Delta and Delta*: 16 k^3/n^2 exp(12k/(n-2))."""
    with np.errstate(over="ignore"):
        return float(16.0 * k ** 3 / n ** 2 * np.exp(12.0 * k / (n - 2)))


def suen_pair(p: CentralizerProfile, x: int, y: int, k: int) -> PairSuenReport:
    """
    Suen bounds on Pr[x in S and y in S] for x != y.

    Edges of the doubled graph come in two kinds: (v, z) ~ (u, z') for adjacent
    v, u (exponent 3(k-1)+1 on the neighborhood product), and (v, x) ~ (v, y)
    (exponent 2(k-1)+1).

    Args:
        p: Centralizer profile with n >= 3
        x, y: Distinct element indices
        k: Draw count, at least 1

    Returns:
        PairSuenReport
    """
    require_theta_domain(p)
    _require_k(k)
    if x == y:
        raise InputError("suen_pair needs x != y; use suen_point for a single element")
    s_x = float(single_mean(p, x))
    s_y = float(single_mean(p, y))
    correlated = float(pair_mean(p, x, x) + 2 * pair_mean(p, x, y) + pair_mean(p, y, y))
    shared = float(shared_vertex_mean(p, x, y))

    degree, closed = neighborhood_counts(k)
    gamma_edges = k * k * degree // 2
    log_q = math.log1p(-s_x) + math.log1p(-s_y)
    with np.errstate(over="ignore"):
        wide = np.exp(-closed * log_q)
        narrow = np.exp(-(degree + 1) * log_q)
        # shared is 0 for non-conjugate pairs; keep 0 * inf out of Delta
        same_vertex = k * k * shared * narrow if shared else 0.0
        delta = float(gamma_edges * correlated * wide + same_vertex)
        delta_star = float(gamma_edges * (s_x + s_y) ** 2 * wide + k * k * s_x * s_y * narrow)
    upper, lower = suen_from_log(delta, delta_star, k * k * log_q)
    return PairSuenReport(
        x=x,
        y=y,
        k=k,
        delta=delta,
        delta_star=delta_star,
        upper=float(upper),
        lower=float(lower),
        baseline=math.exp(k * k * log_q),
    )


def _pair_upper_matrix(p: CentralizerProfile, k: int) -> np.ndarray:
    """suen_pair(...).upper for every ordered pair at once; zero on the diagonal."""
    n = p.order
    c = p.centralizer_sizes.astype(np.float64)
    both = p.intersection_matrix().astype(np.float64)
    s = (2.0 * n - c) / n ** 2
    diagonal = (4.0 * n - 3.0 * c) / n ** 3
    mixed = (4.0 * n - 2.0 * (c[:, None] + c[None, :]) + both) / n ** 3
    correlated = diagonal[:, None] + 2.0 * mixed + diagonal[None, :]
    same_class = p.class_of[:, None] == p.class_of[None, :]
    shared = np.where(same_class, 2.0 * c[:, None] / n ** 2, 0.0)

    degree, closed = neighborhood_counts(k)
    log_1ms = np.log1p(-s)
    log_q = log_1ms[:, None] + log_1ms[None, :]
    with np.errstate(over="ignore", invalid="ignore"):
        delta = (k * k * degree // 2) * correlated * np.exp(-closed * log_q)
        delta += np.where(same_class, k * k * shared * np.exp(-(degree + 1) * log_q), 0.0)
    upper, _ = suen_from_log(delta, np.zeros_like(delta), k * k * log_q)
    np.fill_diagonal(upper, 0.0)
    return upper


def decomposition_failure_lower(p: CentralizerProfile, k: int) -> FailureBounds:
    """
    Second-moment (Paley-Zygmund) lower bound and Markov upper bound on
    Pr[AB ∪ BA != G].

    Args:
        p: Centralizer profile with 3 <= n <= settings.suen.pair_bound_max_order
        k: Draw count, at least 1

    Returns:
        FailureBounds
    """
    require_theta_domain(p)
    _require_k(k)
    limit = settings.suen.pair_bound_max_order
    if p.order > limit:
        raise InstanceTooLargeError(f"pair bounds need n <= {limit}, got n = {p.order}")

    point = _point_bounds(p.order, p.centralizer_sizes, k)
    single_upper = point["upper"]
    pair_upper = _pair_upper_matrix(p, k)
    # Pr[x, y in S] <= Pr[x in S] as well
    pair_upper = np.minimum(pair_upper, np.minimum(single_upper[:, None], single_upper[None, :]))

    expected_lower = float(point["lower"].sum())
    expected_upper = float(single_upper.sum())
    second_upper = expected_upper + float(pair_upper.sum())
    lower = min(1.0, expected_lower ** 2 / second_upper) if second_upper > 0 else 0.0
    logger.debug(f"n={p.order}, k={k}: E|S| in [{expected_lower:.4g}, {expected_upper:.4g}], "
                 f"E|S|^2 <= {second_upper:.4g}")
    return FailureBounds(
        k=k,
        lower=lower,
        upper=min(1.0, expected_upper),
        expected_miss_lower=expected_lower,
        expected_miss_upper=expected_upper,
        second_moment_upper=second_upper,
    )
