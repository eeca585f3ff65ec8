"""
Pytest configuration and fixtures for group_decomposition tests.
"""

import sys
from pathlib import Path

import pytest

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.group_decomposition.groups import (
    build_cyclic,
    build_dihedral,
    build_product,
    build_symmetric,
    parse_group_spec,
)
from src.group_decomposition.structure import profile


# Group fixtures

@pytest.fixture
def c2():
    return build_cyclic(2)


@pytest.fixture
def c8():
    return build_cyclic(8)


@pytest.fixture
def s3():
    """S_3 with Lehmer ranks: 0 identity, 1, 2, 5 transpositions, 3, 4 three-cycles."""
    return build_symmetric(3)


@pytest.fixture
def d8():
    """Dihedral group of order 8: 1, x, x^2, x^3, y, yx, yx^2, yx^3."""
    return build_dihedral(4)


@pytest.fixture
def klein():
    return build_product(build_cyclic(2), build_cyclic(2))


@pytest.fixture
def s3_profile(s3):
    return profile(s3)


@pytest.fixture
def d8_profile(d8):
    return profile(d8)


@pytest.fixture
def transposition():
    return 1


@pytest.fixture
def three_cycle():
    return 3


# Catalog fixtures

SMALL_CATALOG = [
    "cyclic:3",
    "cyclic:8",
    "dihedral:3",
    "dihedral:4",
    "dihedral:5",
    "symmetric:3",
    "symmetric:4",
    "product:(cyclic:2),(cyclic:2)",
    "product:(cyclic:3),(symmetric:3)",
]


@pytest.fixture(params=SMALL_CATALOG)
def catalog_group(request):
    return parse_group_spec(request.param)


@pytest.fixture
def tables_dir():
    return project_root / "data" / "tables"


@pytest.fixture
def bad_table_file(tmp_path):
    """Row 1 repeats element 1."""
    path = tmp_path / "bad.txt"
    path.write_text("3\n0 1 2\n1 1 0\n2 0 1\n")
    return path

