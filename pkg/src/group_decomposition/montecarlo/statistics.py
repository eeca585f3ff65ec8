"""
Binomial intervals and crossing-point estimation for success curves.
"""

import math
from typing import Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import isotonic_regression

from ..exceptions import InputError


def wilson_interval(successes: int, trials: int, z: float = 1.96) -> Tuple[float, float]:
    """
    Wilson score interval for a binomial proportion.

    Args:
        successes: Success count
        trials: Trial count, positive
        z: Normal critical value (1.96 for ~95%)

    Returns:
        (low, high), clamped to [0, 1] and always containing successes/trials
    """
    if trials <= 0:
        raise InputError(f"trials must be positive, got {trials}")
    if not 0 <= successes <= trials:
        raise InputError(f"successes must lie in [0, {trials}], got {successes}")
    p_hat = successes / trials
    z2 = z * z
    denom = 1.0 + z2 / trials
    center = (p_hat + z2 / (2.0 * trials)) / denom
    margin = z * math.sqrt(p_hat * (1.0 - p_hat) / trials + z2 / (4.0 * trials * trials)) / denom
    low = min(max(center - margin, 0.0), p_hat)
    high = max(min(center + margin, 1.0), p_hat)
    return low, high


def standard_error(p_hat: float, trials: int) -> float:
    return math.sqrt(max(p_hat * (1.0 - p_hat), 0.0) / trials)


def smooth_monotone(p_hat: Sequence[float], weights: Sequence[float]) -> np.ndarray:
    """Weighted isotonic (nondecreasing) fit of the observed rates."""
    values = np.asarray(p_hat, dtype=np.float64)
    if values.size == 0:
        return values
    return isotonic_regression(values, weights=np.asarray(weights, dtype=np.float64), increasing=True).x


def find_crossing(ks: Sequence[float], smoothed: Sequence[float], level: float = 0.5) -> Optional[float]:
    """
    Linear interpolation at `level` between the last point below it and the
    first point at or above it. None when the curve starts at or above the
    level or never reaches it.
    """
    ks = np.asarray(ks, dtype=np.float64)
    smoothed = np.asarray(smoothed, dtype=np.float64)
    above = np.nonzero(smoothed >= level)[0]
    if above.size == 0 or above[0] == 0:
        return None
    hi = int(above[0])
    lo = hi - 1
    k_lo, k_hi = ks[lo], ks[hi]
    p_lo, p_hi = smoothed[lo], smoothed[hi]
    if p_hi == p_lo:
        return float(k_hi)
    return float(k_lo + (level - p_lo) * (k_hi - k_lo) / (p_hi - p_lo))
