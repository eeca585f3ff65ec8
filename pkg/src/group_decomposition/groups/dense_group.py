"""
Dense Cayley table backend.
"""

import logging
from typing import Optional, Sequence

import numpy as np

from ..exceptions import InputError
from .base_group import FiniteGroup, GroupBackend, index_dtype

logger = logging.getLogger(__name__)


class DenseGroup(FiniteGroup):
    """Group backed by an n x n multiplication table."""

    def __init__(
        self,
        table: np.ndarray,
        name: str = "table",
        identity: int = 0,
        labels: Optional[Sequence[str]] = None,
    ):
        """
        Initialize from a table that is already known to be a group table.

        Args:
            table: n x n array, entry [g, h] is the index of g*h
            name: Display name (usually the group spec)
            identity: Index of the identity element
            labels: Optional per-element display strings
        """
        super().__init__(name, labels)
        table = np.asarray(table)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise InputError(f"Cayley table must be a non-empty square array, got shape {table.shape}")
        self._table = table.astype(index_dtype(table.shape[0]), copy=False)
        self._table.setflags(write=False)
        self._identity = int(identity)
        self._inverses = self._compute_inverses()

    def _compute_inverses(self) -> np.ndarray:
        rows, cols = np.nonzero(self._table == self._identity)
        inverses = np.empty(self.order, dtype=self._table.dtype)
        inverses[rows] = cols
        inverses.setflags(write=False)
        return inverses

    @property
    def order(self) -> int:
        return self._table.shape[0]

    @property
    def backend(self) -> GroupBackend:
        return GroupBackend.DENSE_TABLE

    @property
    def identity(self) -> int:
        return self._identity

    def multiply(self, g: int, h: int) -> int:
        return int(self._table[g, h])

    def inverse(self, g: int) -> int:
        return int(self._inverses[g])

    def multiply_outer(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self._table[np.ix_(a, b)]

    def multiply_pairs(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self._table[a, b]

    def inverses(self) -> np.ndarray:
        return self._inverses

    def cayley_table(self) -> np.ndarray:
        return self._table

    def __eq__(self, other: object) -> bool:
        # Labels are diagnostics only and take no part in equality
        if not isinstance(other, DenseGroup):
            return NotImplemented
        return self._identity == other._identity and np.array_equal(self._table, other._table)

    def __hash__(self) -> int:
        return hash((self.order, self._identity, self._table[0].tobytes(), self._table[:, 0].tobytes()))
