"""
Group-spec grammar used by the CLI and by trial plans.

    spec    := cyclic:M | dihedral:M | symmetric:M | table:PATH
             | product:(spec),(spec)
"""

import logging
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Tuple

from ..exceptions import GroupSpecError
from .base_group import FiniteGroup
from .constructors import build_cyclic, build_dihedral, build_product, build_symmetric, load_table

logger = logging.getLogger(__name__)

_INTEGER_KINDS = {
    "cyclic": build_cyclic,
    "dihedral": build_dihedral,
    "symmetric": build_symmetric,
}


def _split_product_args(body: str, spec: str) -> Tuple[str, str]:
    """Split "(a),(b)" respecting nested parentheses."""
    if not body.startswith("("):
        raise GroupSpecError(f"product arguments must be parenthesized: {spec!r}")
    depth = 0
    for position, char in enumerate(body):
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
            if depth == 0:
                first = body[1:position]
                rest = body[position + 1:]
                if not rest.startswith(",(") or not rest.endswith(")"):
                    raise GroupSpecError(f"expected product:(spec),(spec), got {spec!r}")
                second = rest[2:-1]
                if _balanced(second):
                    return first, second
                raise GroupSpecError(f"unbalanced parentheses in {spec!r}")
        if depth < 0:
            break
    raise GroupSpecError(f"unbalanced parentheses in {spec!r}")


def _balanced(text: str) -> bool:
    depth = 0
    for char in text:
        depth += {"(": 1, ")": -1}.get(char, 0)
        if depth < 0:
            return False
    return depth == 0


def _parse_positive(value: str, spec: str) -> int:
    try:
        number = int(value)
    except ValueError:
        raise GroupSpecError(f"expected a positive integer in {spec!r}, got {value!r}")
    if number < 1:
        raise GroupSpecError(f"expected a positive integer in {spec!r}, got {number}")
    return number


@lru_cache(maxsize=16)
def parse_group_spec(spec: str) -> FiniteGroup:
    """
    Build the group named by a spec string.

    Args:
        spec: e.g. "dihedral:4", "product:(cyclic:3),(symmetric:3)", "table:data/tables/c2.txt"

    Returns:
        The constructed (and, for tables, validated) group, named by its
        canonical spec. The object is shared between callers; do not mutate it.
    """
    spec = spec.strip()
    kind, separator, body = spec.partition(":")
    if not separator or not body:
        raise GroupSpecError(f"expected kind:argument, got {spec!r}")

    if kind in _INTEGER_KINDS:
        group = _INTEGER_KINDS[kind](_parse_positive(body, spec))
    elif kind == "product":
        first, second = _split_product_args(body, spec)
        group = build_product(parse_group_spec(first), parse_group_spec(second))
    elif kind == "table":
        group = load_table(Path(body), name=spec)
    else:
        raise GroupSpecError(f"unknown group kind {kind!r} in {spec!r}")

    logger.debug(f"Built {spec} (order {group.order}, backend {group.backend.value})")
    return group


def catalog() -> Dict[str, List[str]]:
    """Named families of group specs used for exhaustive identity checks."""
    return {
        "cyclic": [f"cyclic:{m}" for m in range(3, 65)],
        "dihedral": [f"dihedral:{m}" for m in range(3, 33)],
        "symmetric": ["symmetric:3", "symmetric:4"],
        "product": ["product:(cyclic:2),(cyclic:2)", "product:(cyclic:3),(symmetric:3)"],
    }
