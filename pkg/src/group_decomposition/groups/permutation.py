"""
Permutations of [0, m) and their Lehmer ranking.

Scalar helpers work on a single Permutation; the *_many functions are the
vectorized forms used by the permutation backend and by the structure scan.
"""

from dataclasses import dataclass
from math import factorial
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..exceptions import InputError


def factorial_weights(degree: int) -> np.ndarray:
    """Mixed-radix weights (m-1)!, (m-2)!, ..., 0! for Lehmer digits."""
    return np.array([factorial(degree - 1 - i) for i in range(degree)], dtype=np.int64)


@dataclass(frozen=True)
class Permutation:
    """A bijection on [0, degree) stored as its image array."""

    mapping: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.mapping) != list(range(len(self.mapping))):
            raise InputError(f"Not a bijection on [0, {len(self.mapping)}): {self.mapping}")

    @property
    def degree(self) -> int:
        return len(self.mapping)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def unrank(cls, rank: int, degree: int) -> "Permutation":
        """Inverse of rank(): the rank-th permutation in lexicographic order."""
        if not 0 <= rank < factorial(degree):
            raise InputError(f"Rank {rank} out of range for degree {degree}")
        available = list(range(degree))
        image = []
        for i in range(degree):
            digit, rank = divmod(rank, factorial(degree - 1 - i))
            image.append(available.pop(digit))
        return cls(tuple(image))

    def rank(self) -> int:
        """Lehmer rank in [0, degree!)."""
        m = self.degree
        total = 0
        for i, value in enumerate(self.mapping):
            smaller_later = sum(1 for later in self.mapping[i + 1:] if later < value)
            total += smaller_later * factorial(m - 1 - i)
        return total

    def compose(self, other: "Permutation") -> "Permutation":
        """self * other, i.e. apply other first."""
        if other.degree != self.degree:
            raise InputError("Degrees differ")
        return Permutation(tuple(self.mapping[j] for j in other.mapping))

    def inverse(self) -> "Permutation":
        image = [0] * self.degree
        for i, j in enumerate(self.mapping):
            image[j] = i
        return Permutation(tuple(image))

    def cycles(self) -> List[Tuple[int, ...]]:
        seen = set()
        result = []
        for start in range(self.degree):
            if start in seen:
                continue
            cycle = []
            j = start
            while j not in seen:
                seen.add(j)
                cycle.append(j)
                j = self.mapping[j]
            result.append(tuple(cycle))
        return result

    def cycle_type(self) -> Dict[int, int]:
        """Map cycle length -> multiplicity (fixed points included)."""
        counts: Dict[int, int] = {}
        for cycle in self.cycles():
            counts[len(cycle)] = counts.get(len(cycle), 0) + 1
        return counts

    def __str__(self) -> str:
        moved = [c for c in self.cycles() if len(c) > 1]
        if not moved:
            return "()"
        return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in moved)


def centralizer_size_from_cycle_type(cycle_type: Dict[int, int]) -> int:
    """|C(σ)| in S_m: product over lengths l of l^{m_l} * m_l!."""
    size = 1
    for length, multiplicity in cycle_type.items():
        size *= length ** multiplicity * factorial(multiplicity)
    return size


def unrank_many(ranks: Sequence[int], degree: int) -> np.ndarray:
    """Vectorized unrank: returns an (N, degree) uint8 array of images."""
    ranks = np.asarray(ranks, dtype=np.int64)
    count = ranks.shape[0]
    weights = factorial_weights(degree)
    radices = np.arange(degree, 0, -1, dtype=np.int64)
    digits = (ranks[:, None] // weights[None, :]) % radices[None, :]

    available = np.broadcast_to(np.arange(degree, dtype=np.uint8), (count, degree)).copy()
    result = np.empty((count, degree), dtype=np.uint8)
    rows = np.arange(count)
    for i in range(degree):
        chosen = digits[:, i]
        result[:, i] = available[rows, chosen]
        keep = np.ones(available.shape, dtype=bool)
        keep[rows, chosen] = False
        available = available[keep].reshape(count, degree - 1 - i)
    return result


def rank_many(images: np.ndarray) -> np.ndarray:
    """Vectorized Lehmer rank of an (N, degree) array of images."""
    images = np.asarray(images)
    degree = images.shape[1]
    later_smaller = images[:, None, :] < images[:, :, None]
    upper = np.triu(np.ones((degree, degree), dtype=bool), k=1)
    digits = (later_smaller & upper[None, :, :]).sum(axis=2).astype(np.int64)
    return digits @ factorial_weights(degree)


def compose_many(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """Row-wise left[i] * right[i] (apply right first)."""
    return np.take_along_axis(left, right.astype(np.intp), axis=1)


def invert_many(images: np.ndarray) -> np.ndarray:
    count, degree = images.shape
    result = np.empty_like(images)
    rows = np.repeat(np.arange(count), degree)
    result[rows, images.reshape(-1).astype(np.intp)] = np.tile(
        np.arange(degree, dtype=images.dtype), count
    )
    return result


def cycle_length_counts(images: np.ndarray) -> np.ndarray:
    """(N, degree+1) array: column l holds the number of l-cycles of each row."""
    count, degree = images.shape
    positions = np.arange(degree)
    lengths = np.zeros((count, degree), dtype=np.int64)
    current = images.astype(np.intp)
    for step in range(1, degree + 1):
        closed = (current == positions[None, :]) & (lengths == 0)
        lengths[closed] = step
        current = np.take_along_axis(images.astype(np.intp), current, axis=1)
    counts = np.zeros((count, degree + 1), dtype=np.int64)
    for length in range(1, degree + 1):
        counts[:, length] = (lengths == length).sum(axis=1) // length
    return counts
