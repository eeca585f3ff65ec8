"""
Closed-form bounds on theta and the critical subset sizes derived from it.
"""

import math
from dataclasses import dataclass, asdict
from typing import Any, Dict, Optional

from ..exceptions import InputError
from ..structure import CentralizerProfile
from .solver import require_theta_domain, solve_theta


@dataclass(frozen=True)
class ThetaBounds:
    """Lower bounds from the center and the class count, and the upper bound."""
    lower_center: float
    lower_classes: float
    upper: float

    def contains(self, theta: float, slack: float = 1e-12) -> bool:
        """True when theta respects all three bounds."""
        return (
            self.lower_center - slack <= theta
            and self.lower_classes - slack <= theta
            and theta <= self.upper + slack
        )

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return asdict(self)


def theta_bounds(p: CentralizerProfile) -> ThetaBounds:
    """
    Evaluate the bounds on theta from the profile alone.

    Args:
        p: Centralizer profile with n >= 3

    Returns:
        ThetaBounds
    """
    require_theta_domain(p)
    n = p.order
    log_n = math.log(n)
    log_2 = math.log(2)
    return ThetaBounds(
        lower_center=math.log(p.center_size) / log_n,
        lower_classes=1.0 / (2.0 - p.class_count / n),
        upper=max((2.0 / 3.0) * (1.0 + log_2 / log_n), (math.log(p.center_size) + log_2) / log_n),
    )


def critical_size(p: CentralizerProfile, theta: Optional[float] = None) -> float:
    """sqrt(theta n log n); theta is solved for when not given."""
    require_theta_domain(p)
    if theta is None:
        theta = solve_theta(p).theta
    n = p.order
    return math.sqrt(theta * n * math.log(n))


@dataclass(frozen=True)
class MarginLevel:
    """Subset size at log-margin psi from the critical size."""
    k: int
    psi: float
    side: str
    theta: float
    nominal_tail: float

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return asdict(self)


def k_for_margin(p: CentralizerProfile, psi: float, side: str = "upper") -> MarginLevel:
    """
    Subset size at which decomposition should fail (upper side) or succeed
    (lower side) with probability about exp(-theta psi).

    Args:
        p: Centralizer profile with n >= 3
        psi: Margin in [0, log n)
        side: "upper" for ceil(sqrt(theta n (log n + psi))),
            "lower" for floor(sqrt(theta n (log n - psi)))

    Returns:
        MarginLevel
    """
    require_theta_domain(p)
    n = p.order
    log_n = math.log(n)
    if not 0 <= psi < log_n:
        raise InputError(f"psi must lie in [0, log n) = [0, {log_n:.4f}), got {psi}")
    theta = solve_theta(p).theta
    if side == "upper":
        k = math.ceil(math.sqrt(theta * n * (log_n + psi)))
    elif side == "lower":
        k = math.floor(math.sqrt(theta * n * (log_n - psi)))
    else:
        raise InputError(f"side must be 'upper' or 'lower', got {side!r}")
    return MarginLevel(k=k, psi=psi, side=side, theta=theta, nominal_tail=math.exp(-theta * psi))
