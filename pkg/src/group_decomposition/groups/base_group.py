"""
Base group class providing the common interface for all group backends.
Elements are always the indices 0..n-1.
"""

import threading
from abc import ABC, abstractmethod
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np


class GroupBackend(Enum):
    """Supported multiplication backends."""
    DENSE_TABLE = "dense-table"
    PERMUTATION = "permutation"


def index_dtype(order: int) -> np.dtype:
    """Smallest unsigned dtype able to hold the indices 0..order-1."""
    return np.min_scalar_type(max(order - 1, 0))


class FiniteGroup(ABC):
    """Abstract finite group with elements indexed 0..n-1.

    Groups are immutable after construction. Derived data (the centralizer
    profile, the Cayley table of a permutation group) is memoized through
    cached(), which serializes writers and lets readers share the value.
    """

    def __init__(self, name: str, labels: Optional[Sequence[str]] = None):
        self.name = name
        self._labels = list(labels) if labels is not None else None
        self._cache: Dict[str, Any] = {}
        self._cache_lock = threading.Lock()

    @property
    @abstractmethod
    def order(self) -> int:
        """Number of elements n."""

    @property
    @abstractmethod
    def backend(self) -> GroupBackend:
        """Which multiplication backend is in use."""

    @property
    def identity(self) -> int:
        return 0

    @abstractmethod
    def multiply(self, g: int, h: int) -> int:
        """Index of g*h."""

    @abstractmethod
    def inverse(self, g: int) -> int:
        """Index of g^-1."""

    @abstractmethod
    def multiply_outer(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Matrix of products a[i]*b[j], shape (len(a), len(b))."""

    @abstractmethod
    def multiply_pairs(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Elementwise products a[i]*b[i]."""

    @abstractmethod
    def inverses(self) -> np.ndarray:
        """Inverse of every element, as an index array."""

    @abstractmethod
    def cayley_table(self) -> np.ndarray:
        """Dense n x n table; entry [g, h] is g*h."""

    def label(self, g: int) -> str:
        """Display string for an element; diagnostics only."""
        if self._labels is not None:
            return self._labels[g]
        return str(g)

    @property
    def labels(self) -> Optional[List[str]]:
        return self._labels

    def conjugate(self, h: int, x: int) -> int:
        """h x h^-1."""
        return self.multiply(self.multiply(h, x), self.inverse(h))

    def element_order(self, g: int) -> int:
        power, steps = g, 1
        while power != self.identity:
            power = self.multiply(power, g)
            steps += 1
        return steps

    def cached(self, key: str, factory: Callable[[], Any]) -> Any:
        """Return the memoized value for key, computing it once."""
        value = self._cache.get(key)
        if value is not None:
            return value
        with self._cache_lock:
            if key not in self._cache:
                self._cache[key] = factory()
            return self._cache[key]

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"{type(self).__name__}(name={self.name!r}, order={self.order})"
