"""
Dependency graphs for the product indicators.
"""

from dataclasses import dataclass, field
from typing import Iterable, Tuple

import numpy as np

from ..exceptions import InputError


@dataclass(eq=False)
class DependencyGraph:
    """Undirected graph on 0..vertex_count-1; edges are stored once with i < j."""
    vertex_count: int
    edges: np.ndarray = field(default_factory=lambda: np.empty((0, 2), dtype=np.int64))

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InputError(f"vertex_count must be non-negative, got {self.vertex_count}")
        edges = np.asarray(self.edges, dtype=np.int64).reshape(-1, 2)
        if edges.size:
            if edges.min() < 0 or edges.max() >= self.vertex_count:
                raise InputError("edge endpoint out of range")
            if np.any(edges[:, 0] == edges[:, 1]):
                loop = int(edges[edges[:, 0] == edges[:, 1]][0, 0])
                raise InputError(f"self-loop at vertex {loop}")
            edges = np.unique(np.sort(edges, axis=1), axis=0)
        self.edges = edges
        self._adjacency = None

    @classmethod
    def from_pairs(cls, vertex_count: int, pairs: Iterable[Tuple[int, int]]) -> "DependencyGraph":
        return cls(vertex_count, np.array(list(pairs), dtype=np.int64))

    @classmethod
    def from_adjacency(cls, adjacency: np.ndarray) -> "DependencyGraph":
        """Build from a boolean matrix; it must be symmetric with an empty diagonal."""
        adjacency = np.asarray(adjacency, dtype=bool)
        if adjacency.ndim != 2 or adjacency.shape[0] != adjacency.shape[1]:
            raise InputError(f"adjacency must be square, got shape {adjacency.shape}")
        if np.any(np.diag(adjacency)):
            raise InputError(f"self-loop at vertex {int(np.nonzero(np.diag(adjacency))[0][0])}")
        if not np.array_equal(adjacency, adjacency.T):
            raise InputError("adjacency is not symmetric")
        return cls(adjacency.shape[0], np.argwhere(np.triu(adjacency)))

    @property
    def edge_count(self) -> int:
        return int(self.edges.shape[0])

    def adjacency(self) -> np.ndarray:
        if self._adjacency is None:
            matrix = np.zeros((self.vertex_count, self.vertex_count), dtype=bool)
            matrix[self.edges[:, 0], self.edges[:, 1]] = True
            matrix[self.edges[:, 1], self.edges[:, 0]] = True
            self._adjacency = matrix
        return self._adjacency

    def degree(self, v: int) -> int:
        return int(self.adjacency()[v].sum())

    def pair_neighborhood(self, i: int, j: int) -> np.ndarray:
        """Vertices adjacent to i or to j; contains i and j when they are adjacent."""
        adjacency = self.adjacency()
        return np.nonzero(adjacency[i] | adjacency[j])[0]


def neighborhood_counts(k: int) -> Tuple[int, int]:
    """
    Degree of a vertex of the row/column graph on [k] x [k], and the number of
    vertices adjacent to an adjacent pair.

    Returns:
        (2(k-1), 3(k-1)+1); (0, 1) for k = 1
    """
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    return 2 * (k - 1), 3 * (k - 1) + 1


def build_gamma(k: int) -> DependencyGraph:
    """
    (i, j) ~ (l, m) when they share exactly one coordinate; vertex (i, j) is i*k + j.
    """
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    rows, cols = np.divmod(np.arange(k * k), k)
    same_row = rows[:, None] == rows[None, :]
    same_col = cols[:, None] == cols[None, :]
    return DependencyGraph.from_adjacency(same_row ^ same_col)


def build_doubled_gamma(k: int) -> DependencyGraph:
    """
    Graph on [k] x [k] x {x, y}; vertex (v, t) is 2v + t.

    (v, t) ~ (u, t') when v ~ u in the row/column graph, and (v, 0) ~ (v, 1)
    since both indicators read the same draws.
    """
    gamma = build_gamma(k).adjacency()
    doubled = np.kron(gamma, np.ones((2, 2), dtype=bool))
    shared = np.kron(np.eye(k * k, dtype=bool), np.array([[False, True], [True, False]]))
    return DependencyGraph.from_adjacency(doubled | shared)
