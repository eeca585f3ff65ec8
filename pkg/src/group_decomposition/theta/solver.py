"""
Root finder for the theta invariant.

theta is the unique root in [1/2, 1] of

    f(xi) = 2 xi log n - log sum_x exp(xi log n |C(x)| / n)

which is negative at 1/2, non-negative at 1 and increasing in between.
"""

import logging
import math
from dataclasses import dataclass, asdict
from typing import Any, Dict, Optional

import mpmath
import numpy as np
from scipy.special import logsumexp

from config.settings import ThetaSettings, settings
from ..exceptions import InputError, InternalConsistencyError, ThetaDomainError
from ..structure import CentralizerProfile

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ThetaResult:
    """Outcome of the bisection on [1/2, 1]."""
    theta: float
    residual: float
    bracket_width: float
    iterations: int

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return asdict(self)


def require_theta_domain(p: CentralizerProfile) -> None:
    """theta and everything built on it needs n >= 3."""
    if p.order < 3:
        raise ThetaDomainError(f"theta requires a group of order n >= 3, got n = {p.order}")


def f_eval(p: CentralizerProfile, xi: float, grouped: bool = True) -> float:
    """
    Evaluate the defining function of theta.

    Args:
        p: Centralizer profile with n >= 3
        xi: Point in (0, 2]
        grouped: Sum over distinct centralizer sizes (weighted by multiplicity)
            instead of over every element

    Returns:
        2 xi log n - log sum_x exp(xi log n |C(x)| / n)
    """
    require_theta_domain(p)
    if not 0 < xi <= 2:
        raise InputError(f"xi must lie in (0, 2], got {xi}")
    log_n = math.log(p.order)
    if grouped:
        sizes, counts = p.size_multiset()
    else:
        sizes, counts = p.centralizer_sizes, None
    exponents = xi * log_n * sizes.astype(np.float64) / p.order
    # logsumexp shifts by the largest exponent (attained by central elements)
    return 2.0 * xi * log_n - float(logsumexp(exponents, b=counts))


def solve_theta(p: CentralizerProfile, tolerances: Optional[ThetaSettings] = None) -> ThetaResult:
    """
    Bisect f on [1/2, 1].

    Stops once |f| <= residual_tolerance or the bracket is narrower than
    bracket_tolerance.

    Args:
        p: Centralizer profile with n >= 3
        tolerances: Stopping rules; settings.theta when omitted

    Returns:
        ThetaResult
    """
    require_theta_domain(p)
    cfg = tolerances or settings.theta
    lo, hi = 0.5, 1.0
    f_lo = f_eval(p, lo)
    f_hi = f_eval(p, hi)
    if f_lo >= 0 or f_hi < -cfg.residual_tolerance:
        raise InternalConsistencyError(
            f"f does not bracket a root on [1/2, 1]: f(1/2) = {f_lo}, f(1) = {f_hi}"
        )
    if abs(f_hi) <= cfg.residual_tolerance:
        logger.debug(f"f(1) = {f_hi:.3e}; theta = 1")
        return ThetaResult(theta=1.0, residual=abs(f_hi), bracket_width=0.0, iterations=0)

    iterations = 0
    mid, f_mid = lo, f_lo
    while iterations < cfg.max_iterations:
        iterations += 1
        mid = 0.5 * (lo + hi)
        f_mid = f_eval(p, mid)
        if abs(f_mid) <= cfg.residual_tolerance:
            break
        if f_mid < 0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= cfg.bracket_tolerance:
            mid = 0.5 * (lo + hi)
            f_mid = f_eval(p, mid)
            break

    result = ThetaResult(theta=mid, residual=abs(f_mid), bracket_width=hi - lo, iterations=iterations)
    logger.debug(f"theta = {mid:.15f} after {iterations} iterations (|f| = {abs(f_mid):.2e})")
    return result


def solve_theta_precise(p: CentralizerProfile, digits: int = None) -> mpmath.mpf:
    """
    High-precision bisection used as an independent reference value.

    Args:
        p: Centralizer profile with n >= 3
        digits: Working precision in decimal digits; the bracket is shrunk to
            10^-(digits - 20)

    Returns:
        theta as an mpmath number
    """
    require_theta_domain(p)
    digits = digits or settings.theta.precise_digits
    if digits <= 20:
        raise InputError(f"digits must exceed 20, got {digits}")
    sizes, counts = p.size_multiset()
    terms = [(int(s), int(c)) for s, c in zip(sizes, counts)]

    with mpmath.workdps(digits + 10):
        n = mpmath.mpf(p.order)
        log_n = mpmath.log(n)

        def f(xi):
            total = mpmath.fsum(c * mpmath.exp(xi * log_n * s / n) for s, c in terms)
            return 2 * xi * log_n - mpmath.log(total)

        lo, hi = mpmath.mpf(1) / 2, mpmath.mpf(1)
        width = mpmath.mpf(10) ** (-(digits - 20))
        while hi - lo > width:
            mid = (lo + hi) / 2
            if f(mid) < 0:
                lo = mid
            else:
                hi = mid
        return (lo + hi) / 2
