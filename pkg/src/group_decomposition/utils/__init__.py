"""Utility modules for group_decomposition."""

from .random_streams import entropy_seed, trial_generator, check_seed, MAX_SEED
from .rationals import fraction_to_dict, fraction_from_dict

__all__ = [
    "entropy_seed",
    "trial_generator",
    "check_seed",
    "MAX_SEED",
    "fraction_to_dict",
    "fraction_from_dict",
]
