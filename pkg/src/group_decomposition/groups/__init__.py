"""Finite groups with elements indexed 0..n-1: backends, constructors, validation."""

from .base_group import FiniteGroup, GroupBackend
from .dense_group import DenseGroup
from .permutation_group import PermutationGroup
from .permutation import Permutation, centralizer_size_from_cycle_type
from .constructors import (
    build_cyclic,
    build_dihedral,
    build_symmetric,
    build_product,
    load_table,
    dump_table,
)
from .validation import validate_table
from .spec_parser import parse_group_spec, catalog

__all__ = [
    "FiniteGroup",
    "GroupBackend",
    "DenseGroup",
    "PermutationGroup",
    "Permutation",
    "centralizer_size_from_cycle_type",
    "build_cyclic",
    "build_dihedral",
    "build_symmetric",
    "build_product",
    "load_table",
    "dump_table",
    "validate_table",
    "parse_group_spec",
    "catalog",
]
