"""
Brute-force indicator moments, counted directly from the Cayley table.
"""

import logging
from fractions import Fraction
from typing import List

import numpy as np

from config.settings import settings
from ..exceptions import ElementRangeError, InputError, InstanceTooLargeError
from ..groups import FiniteGroup

logger = logging.getLogger(__name__)

ROW = "row"
COLUMN = "column"


def _rows(g: FiniteGroup) -> List[List[int]]:
    return g.cayley_table().tolist()


def _check_order(g: FiniteGroup, limit: int, what: str) -> None:
    if g.order > limit:
        raise InstanceTooLargeError(f"{what} enumeration needs n <= {limit}, got n = {g.order}")


def _check_element(g: FiniteGroup, x: int) -> None:
    if not 0 <= x < g.order:
        raise ElementRangeError(f"Element {x} out of range [0, {g.order})")


def exact_single_mean(g: FiniteGroup, x: int) -> Fraction:
    """#{(a, b) : ab = x or ba = x} / n^2."""
    _check_order(g, settings.oracle.single_mean_max_order, "single-mean")
    _check_element(g, x)
    rows = _rows(g)
    n = g.order
    hits = 0
    for a in range(n):
        for b in range(n):
            if rows[a][b] == x or rows[b][a] == x:
                hits += 1
    return Fraction(hits, n * n)


def _hit_counts(rows: List[List[int]], x: int, shared_axis: str) -> List[int]:
    """For each value of the shared draw, how many partners hit x."""
    n = len(rows)
    counts = [0] * n
    if shared_axis == ROW:
        # shared a_i = g, free b
        for g in range(n):
            counts[g] = sum(1 for b in range(n) if rows[g][b] == x or rows[b][g] == x)
    else:
        # shared b_j = g, free a
        for g in range(n):
            counts[g] = sum(1 for a in range(n) if rows[a][g] == x or rows[g][a] == x)
    return counts


def exact_pair_mean(g: FiniteGroup, x: int, y: int, shared_axis: str = ROW) -> Fraction:
    """
    E[I_v(x) I_u(y)] for v, u sharing a row (a_i) or a column (b_j), by
    counting the triples (shared, free, free') over n^3.
    """
    if shared_axis not in (ROW, COLUMN):
        raise InputError(f"shared_axis must be 'row' or 'column', got {shared_axis!r}")
    _check_order(g, settings.oracle.pair_mean_max_order, "pair-mean")
    _check_element(g, x)
    _check_element(g, y)
    rows = _rows(g)
    hx = _hit_counts(rows, x, shared_axis)
    hy = hx if x == y else _hit_counts(rows, y, shared_axis)
    n = g.order
    return Fraction(sum(a * b for a, b in zip(hx, hy)), n ** 3)


def exact_pair_mean_numerators(g: FiniteGroup, shared_axis: str = ROW) -> np.ndarray:
    """
    n^3 E[I_v(x) I_u(y)] for every (x, y) at once, as an int64 matrix.

    hits[x, g] counts partners of the shared draw g hitting x; the triple
    count for (x, y) is the dot product of rows x and y.
    """
    if shared_axis not in (ROW, COLUMN):
        raise InputError(f"shared_axis must be 'row' or 'column', got {shared_axis!r}")
    _check_order(g, settings.oracle.pair_mean_max_order, "pair-mean")
    rows = _rows(g)
    n = g.order
    hits = np.zeros((n, n), dtype=np.int64)
    for shared in range(n):
        for free in range(n):
            if shared_axis == ROW:
                first, second = rows[shared][free], rows[free][shared]
            else:
                first, second = rows[free][shared], rows[shared][free]
            hits[first, shared] += 1
            if second != first:
                hits[second, shared] += 1
    return hits @ hits.T
