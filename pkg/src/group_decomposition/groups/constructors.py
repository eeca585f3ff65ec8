"""
Constructors for the supported groups and the Cayley-table file loader.
"""

import io
import logging
from pathlib import Path
from typing import BinaryIO, List, Union

import numpy as np

from config.settings import settings
from ..exceptions import InputError, InstanceTooLargeError, TableFormatError
from .base_group import FiniteGroup, GroupBackend, index_dtype
from .dense_group import DenseGroup
from .permutation_group import PermutationGroup
from .validation import validate_table

logger = logging.getLogger(__name__)


def _require_positive(m: int, what: str) -> None:
    if not isinstance(m, (int, np.integer)) or m < 1:
        raise InputError(f"{what} must be a positive integer, got {m!r}")


def build_cyclic(m: int) -> DenseGroup:
    """Cyclic group C_m: i*j = (i + j) mod m."""
    _require_positive(m, "Cyclic order")
    _check_dense_order(m)
    elements = np.arange(m)
    table = np.add.outer(elements, elements) % m
    return DenseGroup(table, name=f"cyclic:{m}", labels=[f"{i}" for i in range(m)])


def build_dihedral(m: int) -> DenseGroup:
    """
    Dihedral group D_{2m} = <x, y : x^m = y^2 = 1, yxy = x^-1>.

    Index i < m is x^i, index m + i is y x^i.
    """
    _require_positive(m, "Dihedral rotation count")
    n = 2 * m
    _check_dense_order(n)
    i = np.arange(m)
    rot_rot = np.add.outer(i, i) % m                  # x^i x^j = x^(i+j)
    rot_ref = (i[None, :] - i[:, None]) % m           # x^i y x^j = y x^(j-i)

    table = np.empty((n, n), dtype=np.int64)
    table[:m, :m] = rot_rot
    table[:m, m:] = m + rot_ref
    table[m:, :m] = m + rot_rot                       # y x^i x^j = y x^(i+j)
    table[m:, m:] = rot_ref                           # y x^i y x^j = x^(j-i)

    rotations = [_power_label("x", k) for k in range(m)]
    labels = rotations + ["y" if k == 0 else "y" + rotations[k] for k in range(m)]
    return DenseGroup(table, name=f"dihedral:{m}", labels=labels)


def _power_label(symbol: str, exponent: int) -> str:
    if exponent == 0:
        return "1"
    if exponent == 1:
        return symbol
    return f"{symbol}^{exponent}"


def build_symmetric(m: int, backend: Union[GroupBackend, str, None] = None) -> FiniteGroup:
    """
    Symmetric group S_m with elements indexed by Lehmer rank.

    Args:
        m: Degree, 1 <= m <= settings.groups.symmetric_max_degree
        backend: Force a backend; by default the dense table is used for
            m <= settings.groups.symmetric_dense_max_degree

    Returns:
        DenseGroup or PermutationGroup
    """
    _require_positive(m, "Symmetric degree")
    if m > settings.groups.symmetric_max_degree:
        raise InstanceTooLargeError(
            f"symmetric:{m} unsupported (degree must be <= {settings.groups.symmetric_max_degree})"
        )
    if backend is None:
        backend = (
            GroupBackend.DENSE_TABLE
            if m <= settings.groups.symmetric_dense_max_degree
            else GroupBackend.PERMUTATION
        )
    backend = GroupBackend(backend)

    permutations = PermutationGroup(m)
    if backend is GroupBackend.PERMUTATION:
        return permutations
    table = permutations.cayley_table()
    labels = [permutations.label(g) for g in range(permutations.order)]
    return DenseGroup(table, name=f"symmetric:{m}", labels=labels)


def build_product(g: FiniteGroup, h: FiniteGroup) -> DenseGroup:
    """Direct product; (a, b) is indexed a*|h| + b, multiplication is componentwise."""
    n = g.order * h.order
    _check_dense_order(n, what=f"product of orders {g.order} and {h.order}")
    tg = g.cayley_table().astype(np.int64)
    th = h.cayley_table().astype(np.int64)
    nh = h.order
    table = (tg[:, None, :, None] * nh + th[None, :, None, :]).reshape(n, n)
    labels = [f"({g.label(a)},{h.label(b)})" for a in range(g.order) for b in range(nh)]
    return DenseGroup(
        table,
        name=f"product:({g.name}),({h.name})",
        identity=g.identity * nh + h.identity,
        labels=labels,
    )


def _check_dense_order(n: int, what: str = "") -> None:
    limit = settings.groups.dense_table_limit
    if n > limit:
        raise InstanceTooLargeError(
            f"{what or 'group'} has order {n}, above the dense table limit {limit}"
        )


def load_table(source: Union[BinaryIO, bytes, str, Path], name: str = "table") -> DenseGroup:
    """
    Load and fully validate a Cayley table.

    The format is plain text: line 1 holds n, then n lines of n
    space-separated 0-based indices; entry (g, h) is g*h.

    Args:
        source: Byte stream, raw bytes, or a path to the file
        name: Display name for the group

    Returns:
        Validated DenseGroup
    """
    if isinstance(source, (str, Path)):
        path = Path(source)
        try:
            with open(path, "rb") as f:
                return load_table(f, name=name)
        except FileNotFoundError as e:
            raise TableFormatError(f"cannot open {path}: {e.strerror}") from e
    if isinstance(source, bytes):
        source = io.BytesIO(source)

    try:
        text = source.read().decode("utf-8")
    except UnicodeDecodeError as e:
        raise TableFormatError(f"not UTF-8 text: {e}") from e

    lines = [line for line in text.splitlines()]
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise TableFormatError("empty input", line=1)

    try:
        n = int(lines[0].strip())
    except ValueError:
        raise TableFormatError(f"expected the order n, got {lines[0].strip()!r}", line=1)
    if n < 1:
        raise TableFormatError(f"order must be positive, got {n}", line=1)
    _check_dense_order(n)
    if len(lines) != n + 1:
        raise TableFormatError(f"expected {n} table rows, found {len(lines) - 1}", line=len(lines))

    rows: List[List[int]] = []
    for offset, line in enumerate(lines[1:], start=2):
        try:
            row = [int(token) for token in line.split()]
        except ValueError:
            raise TableFormatError(f"non-integer entry in {line.strip()!r}", line=offset)
        if len(row) != n:
            raise TableFormatError(f"expected {n} entries, found {len(row)}", line=offset)
        rows.append(row)

    table = np.array(rows, dtype=np.int64)
    identity = validate_table(table)
    logger.info(f"Loaded Cayley table of order {n} (identity {identity})")
    return DenseGroup(table.astype(index_dtype(n)), name=name, identity=identity)


def dump_table(group: FiniteGroup) -> str:
    """Serialize a group in the Cayley-table file format."""
    table = group.cayley_table()
    lines = [str(group.order)]
    lines.extend(" ".join(str(int(v)) for v in row) for row in table)
    return "\n".join(lines) + "\n"
