"""
Group axiom checks for multiplication tables.
Every failure names the offending indices.
"""

import logging
from typing import Optional

import numpy as np

from config.settings import settings
from ..exceptions import GroupValidationError

logger = logging.getLogger(__name__)


def check_latin_square(table: np.ndarray) -> None:
    """Every row and every column must be a permutation of [0, n)."""
    n = table.shape[0]
    if table.ndim != 2 or table.shape[1] != n:
        raise GroupValidationError("shape", f"table must be square, got {table.shape}")
    if table.min() < 0 or table.max() >= n:
        g, h = np.argwhere((table < 0) | (table >= n))[0]
        raise GroupValidationError(
            "range", f"entry at row {g}, column {h} is {table[g, h]}, outside [0, {n})", (int(g), int(h))
        )
    expected = np.arange(n)
    for axis, name in ((1, "row"), (0, "column")):
        sorted_lines = np.sort(table, axis=axis)
        bad = np.nonzero(~np.all(sorted_lines == (expected if axis == 1 else expected[:, None]), axis=axis))[0]
        if bad.size:
            line = int(bad[0])
            values = table[line] if axis == 1 else table[:, line]
            seen = {}
            for position, value in enumerate(values.tolist()):
                if value in seen:
                    raise GroupValidationError(
                        "latin-square",
                        f"{name} {line} repeats element {value} at positions {seen[value]} and {position}",
                        (line, seen[value], position),
                    )
                seen[value] = position


def find_identity(table: np.ndarray) -> int:
    """Index e with e*g = g*e = g for all g."""
    expected = np.arange(table.shape[0])
    left = np.nonzero(np.all(table == expected[None, :], axis=1))[0]
    for e in left.tolist():
        if np.array_equal(table[:, e], expected):
            return int(e)
    raise GroupValidationError("identity", "no two-sided identity element")


def check_inverses(table: np.ndarray, identity: int) -> None:
    """Every g needs h with g*h = h*g = identity."""
    rows, right = np.nonzero(table == identity)
    if rows.size != table.shape[0]:
        missing = sorted(set(range(table.shape[0])) - set(rows.tolist()))
        raise GroupValidationError("inverse", f"element {missing[0]} has no right inverse", (missing[0],))
    bad = np.nonzero(table[right, rows] != identity)[0]
    if bad.size:
        g = int(rows[bad[0]])
        raise GroupValidationError(
            "inverse", f"right inverse {int(right[bad[0]])} of {g} is not a left inverse", (g, int(right[bad[0]]))
        )


def check_associativity(table: np.ndarray, seed: Optional[int] = 0) -> None:
    """(ab)c = a(bc); exhaustive for small n, randomized triples otherwise."""
    n = table.shape[0]
    if n <= settings.groups.exhaustive_associativity_limit:
        for a in range(n):
            left = table[table[a]]          # [b, c] -> (ab)c
            right = table[a][table]         # [b, c] -> a(bc)
            mismatch = np.argwhere(left != right)
            if mismatch.size:
                b, c = (int(v) for v in mismatch[0])
                raise GroupValidationError(
                    "associativity", f"({a}*{b})*{c} != {a}*({b}*{c})", (a, b, c)
                )
        return

    rng = np.random.default_rng(seed)
    remaining = settings.groups.associativity_sample_factor * n * n
    batch = settings.groups.associativity_batch_size
    logger.info(f"Checking associativity on {remaining} random triples (n={n})")
    while remaining > 0:
        size = min(batch, remaining)
        a, b, c = (rng.integers(0, n, size=size) for _ in range(3))
        left = table[table[a, b], c]
        right = table[a, table[b, c]]
        bad = np.nonzero(left != right)[0]
        if bad.size:
            i = bad[0]
            witness = (int(a[i]), int(b[i]), int(c[i]))
            raise GroupValidationError(
                "associativity", "({0}*{1})*{2} != {0}*({1}*{2})".format(*witness), witness
            )
        remaining -= size


def validate_table(table: np.ndarray) -> int:
    """
    Run every group axiom check on a table.

    Args:
        table: Candidate n x n multiplication table

    Returns:
        Index of the identity element
    """
    table = np.asarray(table)
    check_latin_square(table)
    identity = find_identity(table)
    check_inverses(table, identity)
    check_associativity(table)
    return identity
