"""
Permutation-native backend for the symmetric group.
Elements are Lehmer ranks; products are computed by composing images on the fly.
"""

import logging
from math import factorial

import numpy as np

from config.settings import settings
from ..exceptions import InputError, InstanceTooLargeError
from .base_group import FiniteGroup, GroupBackend, index_dtype
from .permutation import Permutation, compose_many, invert_many, rank_many, unrank_many

logger = logging.getLogger(__name__)


class PermutationGroup(FiniteGroup):
    """S_m with elements indexed by Lehmer rank; the identity has rank 0."""

    def __init__(self, degree: int, name: str = ""):
        if degree < 1:
            raise InputError(f"Degree must be positive, got {degree}")
        super().__init__(name or f"symmetric:{degree}")
        self.degree = degree
        self._order = factorial(degree)

    @property
    def order(self) -> int:
        return self._order

    @property
    def backend(self) -> GroupBackend:
        return GroupBackend.PERMUTATION

    def element(self, g: int) -> Permutation:
        return Permutation.unrank(int(g), self.degree)

    def multiply(self, g: int, h: int) -> int:
        return self.element(g).compose(self.element(h)).rank()

    def inverse(self, g: int) -> int:
        return self.element(g).inverse().rank()

    def multiply_pairs(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        left = unrank_many(np.asarray(a), self.degree)
        right = unrank_many(np.asarray(b), self.degree)
        return rank_many(compose_many(left, right))

    def multiply_outer(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a = np.asarray(a)
        b = np.asarray(b)
        left = np.repeat(unrank_many(a, self.degree), len(b), axis=0)
        right = np.tile(unrank_many(b, self.degree), (len(a), 1))
        return rank_many(compose_many(left, right)).reshape(len(a), len(b))

    def inverses(self) -> np.ndarray:
        def compute():
            images = unrank_many(np.arange(self.order), self.degree)
            return rank_many(invert_many(images)).astype(index_dtype(self.order))
        return self.cached("inverses", compute)

    def cayley_table(self) -> np.ndarray:
        """Materialize the dense table; only allowed within the dense limit."""
        limit = settings.groups.dense_table_limit
        if self.order > limit:
            raise InstanceTooLargeError(
                f"Cayley table of order {self.order} exceeds dense limit {limit}"
            )
        return self.cached("cayley_table", self._build_table)

    def _build_table(self) -> np.ndarray:
        n = self.order
        logger.debug(f"Materializing Cayley table of S_{self.degree} ({n} x {n})")
        images = unrank_many(np.arange(n), self.degree)
        table = np.empty((n, n), dtype=index_dtype(n))
        for g in range(n):
            left = np.broadcast_to(images[g], images.shape)
            table[g] = rank_many(compose_many(left, images))
        table.setflags(write=False)
        return table

    def label(self, g: int) -> str:
        return str(self.element(g))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PermutationGroup):
            return NotImplemented
        return self.degree == other.degree

    def __hash__(self) -> int:
        return hash(("permutation", self.degree))
