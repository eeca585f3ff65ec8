"""The theta invariant, its bounds and the critical subset size."""

from .solver import ThetaResult, f_eval, solve_theta, solve_theta_precise, require_theta_domain
from .bounds import ThetaBounds, MarginLevel, theta_bounds, critical_size, k_for_margin

__all__ = [
    "ThetaResult",
    "ThetaBounds",
    "MarginLevel",
    "f_eval",
    "solve_theta",
    "solve_theta_precise",
    "require_theta_domain",
    "theta_bounds",
    "critical_size",
    "k_for_margin",
]
