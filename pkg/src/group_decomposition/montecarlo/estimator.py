"""
Monte Carlo estimation of P(G, k) and of the phase transition in k.

Trial t at subset sizes (k, m) always uses the generator keyed on
(master_seed, k, m, t); chunks of trials run on a thread pool and are
reassembled in index order, so results do not depend on the worker count.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

import numpy as np

from config.settings import settings
from ..exceptions import InputError
from ..groups import FiniteGroup, parse_group_spec
from ..structure import profile
from ..theta import solve_theta
from ..utils import trial_generator
from .plans import TrialPlan, Variant
from .sampling import draw_subset, miss_count, product_union
from .statistics import find_crossing, smooth_monotone, standard_error, wilson_interval

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepPoint:
    """Success count at one k."""
    k: int
    trials: int
    successes: int
    p_hat: float
    ci_low: float
    ci_high: float

    @classmethod
    def from_counts(cls, k: int, trials: int, successes: int) -> "SweepPoint":
        low, high = wilson_interval(successes, trials, settings.montecarlo.confidence_z)
        return cls(k=k, trials=trials, successes=successes, p_hat=successes / trials, ci_low=low, ci_high=high)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "k": self.k,
            "trials": self.trials,
            "successes": self.successes,
            "p_hat": self.p_hat,
            "ci_low": self.ci_low,
            "ci_high": self.ci_high,
        }


@dataclass
class SweepCurve:
    """Points sorted by k, the smoothed curve and the located crossing."""
    points: List[SweepPoint]
    crossing_k: Optional[float]
    critical_prediction: Optional[float]
    group_spec: str
    variant: Variant
    master_seed: int
    m_ratio: float = 1.0
    theta: Optional[float] = None
    smoothed: List[float] = field(default_factory=list)

    @property
    def crossing_found(self) -> bool:
        return self.crossing_k is not None

    @property
    def prediction_ratio(self) -> Optional[float]:
        """crossing_k over the predicted critical size."""
        if self.crossing_k is None or not self.critical_prediction:
            return None
        return self.crossing_k / self.critical_prediction

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "group_spec": self.group_spec,
            "variant": self.variant.value,
            "master_seed": self.master_seed,
            "m_ratio": self.m_ratio,
            "theta": self.theta,
            "critical_prediction": self.critical_prediction,
            "crossing_k": self.crossing_k,
            "crossing_found": self.crossing_found,
            "prediction_ratio": self.prediction_ratio,
            "points": [point.to_dict() for point in self.points],
            "smoothed": list(self.smoothed),
        }


@dataclass(frozen=True)
class MissStats:
    """Summary of |S| over independent trials."""
    k: int
    m: int
    trials: int
    mean: float
    variance: float
    histogram: Dict[int, int]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "k": self.k,
            "m": self.m,
            "trials": self.trials,
            "mean": self.mean,
            "variance": self.variance,
            "histogram": {str(size): count for size, count in self.histogram.items()},
        }


def b_draws_for(k: int, m_ratio: float) -> int:
    """m = round(m_ratio k), at least 1."""
    if m_ratio <= 0:
        raise InputError(f"m_ratio must be positive, got {m_ratio}")
    return max(1, int(round(m_ratio * k)))


def _trial_misses(group: FiniteGroup, k: int, m: int, variant: Variant, master_seed: int,
                  indices: range) -> np.ndarray:
    misses = np.empty(len(indices), dtype=np.int64)
    for slot, trial_index in enumerate(indices):
        rng = trial_generator(master_seed, k, m, trial_index)
        a = draw_subset(group, k, rng)
        b = a if variant is Variant.AA else draw_subset(group, m, rng)
        misses[slot] = miss_count(product_union(group, a, b, variant))
    return misses


def run_trials(
    group: FiniteGroup,
    k: int,
    m: int,
    variant: Variant,
    trials: int,
    master_seed: int,
    workers: Optional[int] = None,
    start: int = 0,
) -> np.ndarray:
    """
    |S| for trials start .. start+trials-1, in trial order.

    Args:
        group: Group to draw from (shared read-only)
        k, m: Draw counts for A and B
        variant: Success event
        trials: Number of trials
        master_seed: 64-bit master seed
        workers: Thread count; defaults to settings.montecarlo.workers
        start: First trial index

    Returns:
        int64 array of miss sizes
    """
    variant = Variant(variant)
    workers = workers or settings.montecarlo.workers
    per_task = settings.montecarlo.trials_per_task
    chunks = [range(s, min(s + per_task, start + trials)) for s in range(start, start + trials, per_task)]

    def run(indices: range) -> np.ndarray:
        return _trial_misses(group, k, m, variant, master_seed, indices)

    if workers <= 1 or len(chunks) <= 1:
        parts = [run(indices) for indices in chunks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            parts = list(executor.map(run, chunks))
    return np.concatenate(parts) if parts else np.empty(0, dtype=np.int64)


def _warn_unequal_regime(group: FiniteGroup, k: int, m: int) -> None:
    n = group.order
    if k != m and n >= 3 and max(k, m) > n / math.log(n):
        logger.warning(f"max(k, m) = {max(k, m)} exceeds n/log n = {n / math.log(n):.1f}; "
                       f"the k*m threshold is not expected to apply")


def estimate_p(plan: TrialPlan, group: Optional[FiniteGroup] = None, workers: Optional[int] = None) -> SweepPoint:
    """
    Estimate the success probability of a trial plan.

    Args:
        plan: Validated TrialPlan
        group: Prebuilt group; parsed from plan.group_spec when omitted
        workers: Thread count

    Returns:
        SweepPoint with the Wilson interval
    """
    group = group or parse_group_spec(plan.group_spec)
    m = plan.b_draws
    _warn_unequal_regime(group, plan.k, m)
    misses = run_trials(group, plan.k, m, plan.variant, plan.trials, plan.master_seed, workers)
    return SweepPoint.from_counts(plan.k, plan.trials, int(np.count_nonzero(misses == 0)))


def critical_prediction(group: FiniteGroup, variant=Variant.BOTH, m_ratio: float = 1.0,
                        theta: Optional[float] = None) -> Optional[float]:
    """
    Predicted transition point in k.

    both: sqrt(theta n log n); ab-only: sqrt(n log n); aa: sqrt(2 theta n log n).
    With m = m_ratio k the threshold sits on k m, so k = sqrt(threshold / m_ratio).
    None for n < 3.
    """
    variant = Variant(variant)
    n = group.order
    if n < 3:
        return None
    if theta is None:
        theta = solve_theta(profile(group)).theta
    scale = {Variant.BOTH: theta, Variant.AB_ONLY: 1.0, Variant.AA: 2.0 * theta}[variant]
    product = scale * n * math.log(n)
    if variant is not Variant.AA:
        product /= m_ratio
    return math.sqrt(product)


def _theta_or_none(group: FiniteGroup) -> Optional[float]:
    return solve_theta(profile(group)).theta if group.order >= 3 else None


def _curve(group: FiniteGroup, points: List[SweepPoint], master_seed: int, variant: Variant,
           m_ratio: float) -> SweepCurve:
    smoothed = smooth_monotone([pt.p_hat for pt in points], [pt.trials for pt in points])
    crossing = find_crossing([pt.k for pt in points], smoothed)
    theta = _theta_or_none(group)
    prediction = critical_prediction(group, variant, m_ratio, theta) if theta is not None else None
    if crossing is None:
        logger.info(f"{group.name}: success rate never crosses 1/2 on k in "
                    f"[{points[0].k}, {points[-1].k}]")
    else:
        logger.info(f"{group.name}: crossing at k = {crossing:.2f} (predicted {prediction})")
    return SweepCurve(
        points=points,
        crossing_k=crossing,
        critical_prediction=prediction,
        group_spec=group.name,
        variant=variant,
        master_seed=master_seed,
        m_ratio=m_ratio,
        theta=theta,
        smoothed=[float(v) for v in smoothed],
    )


def sweep(
    group: FiniteGroup,
    k_values: Iterable[int],
    trials_per_k: int,
    master_seed: int,
    variant=Variant.BOTH,
    m_ratio: float = 1.0,
    workers: Optional[int] = None,
) -> SweepCurve:
    """
    Estimate P(G, k) over a range of k and locate the 1/2 crossing.

    Args:
        group: Group to sweep
        k_values: Draw counts for A (sorted and deduplicated)
        trials_per_k: Trials at every k
        master_seed: 64-bit master seed
        variant: Success event
        m_ratio: B gets round(m_ratio k) draws
        workers: Thread count

    Returns:
        SweepCurve
    """
    variant = Variant(variant)
    ks = sorted(set(int(k) for k in k_values))
    if not ks:
        raise InputError("k range is empty")
    if ks[0] < 1:
        raise InputError(f"k must be at least 1, got {ks[0]}")
    if trials_per_k < 1:
        raise InputError(f"trials_per_k must be positive, got {trials_per_k}")

    logger.info(f"Sweeping {group.name} ({variant.value}) over {len(ks)} values of k, {trials_per_k} trials each")
    points = []
    for k in ks:
        m = b_draws_for(k, m_ratio)
        _warn_unequal_regime(group, k, m)
        misses = run_trials(group, k, m, variant, trials_per_k, master_seed, workers)
        point = SweepPoint.from_counts(k, trials_per_k, int(np.count_nonzero(misses == 0)))
        logger.debug(f"k={k}: {point.successes}/{point.trials}")
        points.append(point)
    return _curve(group, points, master_seed, variant, m_ratio)


def window_sweep(
    group: FiniteGroup,
    master_seed: int,
    trials_per_k: Optional[int] = None,
    variant=Variant.BOTH,
    m_ratio: float = 1.0,
    workers: Optional[int] = None,
) -> SweepCurve:
    """Step-1 sweep over [C - sqrt(n), C + sqrt(n)] around the predicted C."""
    prediction = critical_prediction(group, variant, m_ratio)
    if prediction is None:
        raise InputError(f"the transition window needs n >= 3, got n = {group.order}")
    half_width = math.sqrt(group.order)
    k_min = max(1, math.ceil(prediction - half_width))
    k_max = max(k_min, math.floor(prediction + half_width))
    trials = trials_per_k or settings.montecarlo.default_trials * settings.montecarlo.window_trial_factor
    return sweep(group, range(k_min, k_max + 1), trials, master_seed, variant, m_ratio, workers)


def adaptive_crossing(
    group: FiniteGroup,
    k_low: int,
    k_high: int,
    master_seed: int,
    variant=Variant.BOTH,
    m_ratio: float = 1.0,
    trials_per_round: Optional[int] = None,
    max_trials_per_k: Optional[int] = None,
    workers: Optional[int] = None,
) -> SweepCurve:
    """
    Bisect on k for the 1/2 crossing.

    At each midpoint trials are added in rounds until the rate is
    settings.montecarlo.separation_sigmas standard errors away from 1/2 or
    max_trials_per_k is used up; the bracket then moves to that side.

    Returns:
        SweepCurve of every evaluated k; crossing_k interpolates the final bracket
    """
    variant = Variant(variant)
    if not 1 <= k_low < k_high:
        raise InputError(f"need 1 <= k_low < k_high, got [{k_low}, {k_high}]")
    cfg = settings.montecarlo
    per_round = trials_per_round or cfg.default_trials
    cap = max(max_trials_per_k or 16 * per_round, per_round)
    counts: Dict[int, List[int]] = {}

    def rate(k: int) -> float:
        trials, successes = counts.get(k, [0, 0])
        return successes / trials

    def add_round(k: int) -> None:
        trials, successes = counts.setdefault(k, [0, 0])
        m = b_draws_for(k, m_ratio)
        misses = run_trials(group, k, m, variant, per_round, master_seed, workers, start=trials)
        counts[k] = [trials + per_round, successes + int(np.count_nonzero(misses == 0))]

    def settle(k: int) -> None:
        add_round(k)
        while counts[k][0] < cap:
            p_hat = rate(k)
            if abs(p_hat - 0.5) > cfg.separation_sigmas * standard_error(p_hat, counts[k][0]):
                break
            add_round(k)

    lo, hi = k_low, k_high
    settle(lo)
    settle(hi)
    bracketed = rate(lo) < 0.5 <= rate(hi)
    if bracketed:
        while hi - lo > 1:
            mid = (lo + hi) // 2
            settle(mid)
            if rate(mid) >= 0.5:
                hi = mid
            else:
                lo = mid
            logger.debug(f"bracket [{lo}, {hi}]")

    points = [SweepPoint.from_counts(k, trials, successes) for k, (trials, successes) in sorted(counts.items())]
    curve = _curve(group, points, master_seed, variant, m_ratio)
    curve.crossing_k = find_crossing([lo, hi], [rate(lo), rate(hi)]) if bracketed else None
    return curve


def miss_stats(
    group: FiniteGroup,
    k: int,
    trials: int,
    master_seed: int,
    m: Optional[int] = None,
    variant=Variant.BOTH,
    workers: Optional[int] = None,
) -> MissStats:
    """
    Mean, sample variance and histogram of |S| = n - |product set|.

    Args:
        group: Group to draw from
        k: Draws for A
        trials: Number of trials
        master_seed: 64-bit master seed
        m: Draws for B (defaults to k)
        variant: Product event
        workers: Thread count

    Returns:
        MissStats
    """
    if trials < 1:
        raise InputError(f"trials must be positive, got {trials}")
    m = k if m is None else m
    misses = run_trials(group, k, m, Variant(variant), trials, master_seed, workers)
    histogram = {int(size): int(count) for size, count in enumerate(np.bincount(misses)) if count}
    return MissStats(
        k=k,
        m=m,
        trials=trials,
        mean=float(misses.mean()),
        variance=float(misses.var(ddof=1)) if trials > 1 else 0.0,
        histogram=histogram,
    )
