"""
Centralizers, conjugacy classes and the center of a finite group.
"""

import logging
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from ..exceptions import ElementRangeError
from ..groups import FiniteGroup, GroupBackend, PermutationGroup
from ..groups.permutation import cycle_length_counts, unrank_many

logger = logging.getLogger(__name__)

# Rows of the commute scan handled per numpy block
_SCAN_BLOCK = 512


@dataclass
class CentralizerProfile:
    """Per-element centralizer sizes plus the conjugacy-class partition."""
    order: int
    centralizer_sizes: np.ndarray
    class_of: np.ndarray
    class_sizes: np.ndarray
    class_count: int
    center_size: int
    group: Optional[FiniteGroup] = field(default=None, repr=False, compare=False)
    _intersections: Dict[Tuple[int, int], int] = field(default_factory=dict, repr=False, compare=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def size_multiset(self) -> Tuple[np.ndarray, np.ndarray]:
        """Distinct centralizer sizes and how many elements have each."""
        return np.unique(self.centralizer_sizes, return_counts=True)

    def centralizer_size(self, x: int) -> int:
        self._check_element(x)
        return int(self.centralizer_sizes[x])

    def centralizer(self, x: int) -> np.ndarray:
        """Indices of the elements commuting with x."""
        self._check_element(x)
        group = self._require_group()
        everyone = np.arange(self.order)
        xs = np.full(self.order, x)
        return np.nonzero(group.multiply_pairs(xs, everyone) == group.multiply_pairs(everyone, xs))[0]

    def intersection_size(self, x: int, y: int) -> int:
        """|C(x) ∩ C(y)|, scanned on demand and cached per raw pair."""
        self._check_element(x)
        self._check_element(y)
        if x == y:
            return int(self.centralizer_sizes[x])
        key = (min(x, y), max(x, y))
        cached = self._intersections.get(key)
        if cached is not None:
            return cached
        size = int(np.intersect1d(self.centralizer(x), self.centralizer(y), assume_unique=True).size)
        with self._lock:
            self._intersections[key] = size
        return size

    def intersection_matrix(self) -> np.ndarray:
        """All |C(x) ∩ C(y)| at once, from the boolean commute matrix."""
        group = self._require_group()
        table = group.cayley_table()
        commute = (table == table.T).astype(np.int64)
        return commute @ commute.T

    def burnside_sum(self) -> int:
        return int(self.centralizer_sizes.astype(object).sum())

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "n": self.order,
            "centralizer_sizes": [int(v) for v in self.centralizer_sizes],
            "class_sizes": [int(v) for v in self.class_sizes],
            "R": self.class_count,
            "center_size": self.center_size,
        }

    def _check_element(self, x: int) -> None:
        if not 0 <= x < self.order:
            raise ElementRangeError(f"Element {x} out of range [0, {self.order})")

    def _require_group(self) -> FiniteGroup:
        if self.group is None:
            raise ValueError("This profile was built without its group; intersections are unavailable")
        return self.group


def _dense_centralizer_sizes(table: np.ndarray) -> np.ndarray:
    n = table.shape[0]
    sizes = np.empty(n, dtype=np.int64)
    for start in range(0, n, _SCAN_BLOCK):
        stop = min(start + _SCAN_BLOCK, n)
        # row x of the block: x*h for all h, against h*x for all h
        sizes[start:stop] = (table[start:stop, :] == table[:, start:stop].T).sum(axis=1)
    return sizes


def _dense_classes(group: FiniteGroup) -> Tuple[np.ndarray, List[int]]:
    table = group.cayley_table()
    inverses = group.inverses()
    n = group.order
    class_of = np.full(n, -1, dtype=np.int64)
    class_sizes: List[int] = []
    for x in range(n):
        if class_of[x] >= 0:
            continue
        orbit = np.unique(table[table[:, x], inverses])   # h x h^-1 over all h
        class_of[orbit] = len(class_sizes)
        class_sizes.append(int(orbit.size))
    return class_of, class_sizes


def _permutation_profile_arrays(group: PermutationGroup) -> Tuple[np.ndarray, np.ndarray, List[int]]:
    """Centralizer sizes and classes of S_m from cycle types, in rank chunks."""
    m = group.degree
    n = group.order
    sizes = np.empty(n, dtype=np.int64)
    keys = np.empty(n, dtype=np.int64)
    chunk = 1 << 18
    lengths = np.arange(m + 1, dtype=np.int64)
    radix = (m + 1) ** np.arange(m + 1, dtype=np.int64)
    factorials = np.array([factorial(k) for k in range(m + 1)], dtype=np.int64)
    for start in range(0, n, chunk):
        ranks = np.arange(start, min(start + chunk, n))
        counts = cycle_length_counts(unrank_many(ranks, m))
        # |C(σ)| = prod_l l^{m_l} m_l!
        sizes[start:start + len(ranks)] = np.prod(lengths[None, :] ** counts * factorials[counts], axis=1)
        keys[start:start + len(ranks)] = counts @ radix
    unique_keys, first_seen, class_of = np.unique(keys, return_index=True, return_inverse=True)
    # Renumber classes by first appearance in rank order
    order = np.argsort(first_seen)
    renumber = np.empty_like(order)
    renumber[order] = np.arange(order.size)
    class_of = renumber[class_of]
    class_sizes = [int(n // sizes[first_seen[i]]) for i in order]
    return sizes, class_of, class_sizes


def profile(group: FiniteGroup) -> CentralizerProfile:
    """
    Compute (once per group) the centralizer profile.

    Args:
        group: Any valid group

    Returns:
        CentralizerProfile with sizes, classes, R(G) and |Z(G)|
    """
    return group.cached("centralizer_profile", lambda: _build_profile(group))


def _build_profile(group: FiniteGroup) -> CentralizerProfile:
    n = group.order
    logger.debug(f"Computing centralizer profile of {group.name} (n={n})")
    if group.backend is GroupBackend.PERMUTATION:
        sizes, class_of, class_sizes = _permutation_profile_arrays(group)
    else:
        sizes = _dense_centralizer_sizes(group.cayley_table())
        class_of, class_sizes = _dense_classes(group)
    result = CentralizerProfile(
        order=n,
        centralizer_sizes=sizes,
        class_of=class_of,
        class_sizes=np.asarray(class_sizes, dtype=np.int64),
        class_count=len(class_sizes),
        center_size=int(np.count_nonzero(sizes == n)),
        group=group,
    )
    logger.info(f"Profile of {group.name}: n={n}, R={result.class_count}, |Z|={result.center_size}")
    return result


def commute_probability(group: FiniteGroup) -> Fraction:
    """Pr[ab = ba] for independent uniform a, b: sum of |C(x)| over n^2."""
    p = profile(group)
    return Fraction(p.burnside_sum(), p.order * p.order)
