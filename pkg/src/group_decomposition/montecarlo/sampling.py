"""
Random subsets and product-set membership masks.
"""

import numpy as np

from ..exceptions import InputError
from ..groups import FiniteGroup
from .plans import Variant


def draw_subset(g: FiniteGroup, k: int, rng: np.random.Generator) -> np.ndarray:
    """
    Support of k independent uniform draws (sorted, size <= k).

    Generator.integers samples by rejection, so there is no modulo bias.
    """
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    return np.unique(rng.integers(0, g.order, size=k))


def product_union(g: FiniteGroup, a: np.ndarray, b: np.ndarray, variant=Variant.BOTH) -> np.ndarray:
    """
    Membership mask over [0, n) of the product set for a variant.

    both: {a_i b_j} ∪ {b_j a_i}; ab-only: {a_i b_j}; aa: {a_i a_j} (b ignored).
    """
    variant = Variant(variant)
    mask = np.zeros(g.order, dtype=bool)
    if variant is Variant.AA:
        mask[g.multiply_outer(a, a).ravel()] = True
        return mask
    mask[g.multiply_outer(a, b).ravel()] = True
    if variant is Variant.BOTH:
        mask[g.multiply_outer(b, a).ravel()] = True
    return mask


def miss_count(mask: np.ndarray) -> int:
    """|S| = n - |product set|."""
    return int(mask.size - np.count_nonzero(mask))
