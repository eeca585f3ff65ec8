"""
Tests for group backends, constructors, table validation and the group-spec grammar.
"""

import io
import itertools
from math import factorial
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given, strategies as st

import sys
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.group_decomposition.exceptions import (
    GroupSpecError,
    GroupValidationError,
    InputError,
    InstanceTooLargeError,
    TableFormatError,
)
from src.group_decomposition.groups import (
    DenseGroup,
    GroupBackend,
    Permutation,
    PermutationGroup,
    build_cyclic,
    build_dihedral,
    build_product,
    build_symmetric,
    catalog,
    centralizer_size_from_cycle_type,
    dump_table,
    load_table,
    parse_group_spec,
    validate_table,
)
from src.group_decomposition.groups.permutation import (
    compose_many,
    cycle_length_counts,
    invert_many,
    rank_many,
    unrank_many,
)


class TestPermutation:
    """Test cases for Lehmer ranking and permutation arithmetic."""

    @given(st.integers(min_value=1, max_value=10).flatmap(
        lambda m: st.tuples(st.just(m), st.integers(min_value=0, max_value=factorial(m) - 1))))
    def test_rank_unrank_bijection(self, degree_and_rank):
        """unrank then rank returns the original rank."""
        degree, rank = degree_and_rank
        assert Permutation.unrank(rank, degree).rank() == rank

    def test_all_small_degrees(self):
        """Every permutation of degree <= 6 round-trips at its lexicographic position."""
        for degree in range(1, 7):
            for rank, mapping in enumerate(itertools.permutations(range(degree))):
                assert Permutation(mapping).rank() == rank
                assert Permutation.unrank(rank, degree).mapping == mapping

    def test_random_large_degrees(self):
        """10^4 random ranks of degree 7..10 round-trip through the vectorized forms."""
        rng = np.random.default_rng(20240607)
        for degree in range(7, 11):
            ranks = rng.integers(0, factorial(degree), size=2500)
            images = unrank_many(ranks, degree)
            assert np.array_equal(np.sort(images, axis=1), np.tile(np.arange(degree), (len(ranks), 1)))
            assert np.array_equal(rank_many(images), ranks)
            for r in ranks[:5].tolist():
                assert Permutation.unrank(r, degree).rank() == r

    def test_rank_zero_is_identity(self):
        """Rank 0 is the identity permutation."""
        assert Permutation.unrank(0, 5) == Permutation.identity(5)

    def test_lexicographic_order(self):
        """Ranks follow lexicographic order of the image tuples."""
        images = [Permutation.unrank(r, 3).mapping for r in range(6)]
        assert images == sorted(images)

    def test_compose_applies_right_first(self):
        """(p * q)(i) = p(q(i))."""
        p = Permutation((1, 2, 0))
        q = Permutation((0, 2, 1))
        assert p.compose(q).mapping == (1, 0, 2)

    def test_inverse(self):
        """p * p^-1 is the identity."""
        p = Permutation((3, 0, 2, 1))
        assert p.compose(p.inverse()) == Permutation.identity(4)

    def test_rejects_non_bijection(self):
        """Repeated images are rejected."""
        with pytest.raises(ValueError):
            Permutation((0, 0, 1))

    def test_cycle_notation(self):
        """String form is 1-based cycle notation without fixed points."""
        assert str(Permutation((1, 0, 2))) == "(1 2)"
        assert str(Permutation.identity(3)) == "()"

    def test_centralizer_from_cycle_type(self):
        """|C((1 2)(3 4))| in S_4 is 8; |C((1 2 3))| in S_4 is 3."""
        assert centralizer_size_from_cycle_type({2: 2}) == 8
        assert centralizer_size_from_cycle_type({3: 1, 1: 1}) == 3

    def test_vectorized_matches_scalar(self):
        """unrank_many/rank_many/compose_many/invert_many agree with the scalar forms."""
        degree = 5
        ranks = np.arange(factorial(degree))
        images = unrank_many(ranks, degree)
        assert np.array_equal(rank_many(images), ranks)
        for r in (0, 7, 59, 119):
            assert tuple(images[r]) == Permutation.unrank(r, degree).mapping
        left, right = images[17:18], images[83:84]
        expected = Permutation.unrank(17, degree).compose(Permutation.unrank(83, degree)).rank()
        assert rank_many(compose_many(left, right))[0] == expected
        assert rank_many(invert_many(images[42:43]))[0] == Permutation.unrank(42, degree).inverse().rank()

    def test_cycle_length_counts(self):
        """Column l counts the l-cycles."""
        image = np.array([[1, 0, 3, 4, 2]], dtype=np.uint8)
        counts = cycle_length_counts(image)
        assert counts[0, 2] == 1
        assert counts[0, 3] == 1
        assert counts[0].sum() == 2


class TestConstructors:
    """Test cases for the group constructors."""

    def test_cyclic(self):
        """C_5 multiplies by addition mod 5."""
        g = build_cyclic(5)
        assert g.order == 5
        assert g.multiply(3, 4) == 2
        assert g.inverse(2) == 3
        assert g.identity == 0

    def test_dihedral_relations(self):
        """x^m = y^2 = 1 and y x y = x^-1."""
        m = 6
        g = build_dihedral(m)
        x, y = 1, m
        power = g.identity
        for _ in range(m):
            power = g.multiply(power, x)
        assert power == g.identity
        assert g.multiply(y, y) == g.identity
        assert g.multiply(g.multiply(y, x), y) == g.inverse(x)
        assert g.label(m + 2) == "yx^2"

    def test_dihedral_is_valid_group(self):
        """The dihedral table passes every axiom check."""
        for m in (3, 4, 7):
            assert validate_table(build_dihedral(m).cayley_table()) == 0

    def test_symmetric_backends_agree(self):
        """Dense and permutation-native S_4 have the same table."""
        dense = build_symmetric(4)
        native = build_symmetric(4, backend="permutation")
        assert dense.backend is GroupBackend.DENSE_TABLE
        assert native.backend is GroupBackend.PERMUTATION
        assert np.array_equal(dense.cayley_table(), native.cayley_table())

    def test_symmetric_backend_default(self):
        """Degrees above the dense threshold use the permutation backend."""
        assert isinstance(build_symmetric(8), PermutationGroup)

    def test_permutation_backend_products(self):
        """multiply_outer and multiply_pairs agree with scalar multiply."""
        g = PermutationGroup(6)
        a = np.array([0, 5, 300, 719])
        b = np.array([1, 2, 718])
        outer = g.multiply_outer(a, b)
        assert outer.shape == (4, 3)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                assert outer[i, j] == g.multiply(int(ai), int(bj))
        assert np.array_equal(g.multiply_pairs(a[:3], b), outer[[0, 1, 2], [0, 1, 2]])

    def test_symmetric_too_large(self):
        """Degrees above the cap are rejected."""
        with pytest.raises(InstanceTooLargeError):
            build_symmetric(11)

    def test_permutation_table_limit(self):
        """S_8 has no dense table within the default limit."""
        with pytest.raises(InstanceTooLargeError):
            PermutationGroup(8).cayley_table()

    def test_product(self):
        """C_2 x C_3 is abelian of order 6 with componentwise multiplication."""
        g = build_product(build_cyclic(2), build_cyclic(3))
        assert g.order == 6
        # (1, 2) * (1, 2) = (0, 1) -> index 0*3 + 1
        assert g.multiply(1 * 3 + 2, 1 * 3 + 2) == 1
        table = g.cayley_table()
        assert np.array_equal(table, table.T)

    def test_product_identity_position(self, d8):
        """The identity of a product is (e_g, e_h)."""
        g = build_product(d8, build_cyclic(3))
        assert g.identity == 0
        assert g.label(4) == "(x,1)"

    def test_invalid_sizes(self):
        """Non-positive parameters are rejected."""
        with pytest.raises(ValueError):
            build_cyclic(0)
        with pytest.raises(ValueError):
            build_dihedral(-2)

    def test_element_order_and_conjugate(self, s3):
        """Transpositions have order 2, three-cycles order 3."""
        assert s3.element_order(1) == 2
        assert s3.element_order(3) == 3
        conjugates = {s3.conjugate(h, 1) for h in range(s3.order)}
        assert conjugates == {1, 2, 5}


class TestValidation:
    """Test cases for the group axiom checks."""

    def test_latin_square_witness(self):
        """A repeated row entry names the row and both positions."""
        table = np.array([[0, 1, 2], [1, 1, 0], [2, 0, 1]])
        with pytest.raises(GroupValidationError) as exc:
            validate_table(table)
        assert exc.value.kind == "latin-square"
        assert exc.value.witness == (1, 0, 1)

    def test_out_of_range(self):
        """Entries outside [0, n) are reported."""
        with pytest.raises(GroupValidationError) as exc:
            validate_table(np.array([[0, 1], [1, 2]]))
        assert exc.value.kind == "range"

    def test_no_identity(self):
        """A Latin square without identity is rejected."""
        table = np.array([[0, 2, 1], [2, 1, 0], [1, 0, 2]])
        with pytest.raises(GroupValidationError) as exc:
            validate_table(table)
        assert exc.value.kind == "identity"

    def test_non_associative(self):
        """A loop of order 5 that is not a group fails associativity."""
        table = np.array([
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ])
        with pytest.raises(GroupValidationError) as exc:
            validate_table(table)
        assert exc.value.kind == "associativity"
        a, b, c = exc.value.witness
        assert table[table[a, b], c] != table[a, table[b, c]]

    def test_validation_error_is_input_error(self):
        """Validation failures map to the input-error exit code."""
        assert issubclass(GroupValidationError, InputError)
        assert GroupValidationError.exit_code == 2


class TestLoadTable:
    """Test cases for the Cayley table file format."""

    def test_load_file(self, tables_dir):
        """The shipped Klein four-group table loads and validates."""
        g = load_table(tables_dir / "klein4.txt")
        assert isinstance(g, DenseGroup)
        assert g.order == 4
        assert all(g.multiply(x, x) == 0 for x in range(4))

    def test_load_bytes_and_stream(self):
        """Raw bytes and binary streams are accepted."""
        data = b"2\n0 1\n1 0\n"
        assert load_table(data).order == 2
        assert load_table(io.BytesIO(data)).order == 2

    def test_round_trip(self, d8):
        """dump_table output loads back to the same table."""
        loaded = load_table(dump_table(d8).encode())
        assert np.array_equal(loaded.cayley_table(), d8.cayley_table())

    def test_nonzero_identity(self):
        """The identity need not be index 0."""
        g = load_table(b"2\n1 0\n0 1\n")
        assert g.identity == 1
        assert g.inverse(0) == 0

    @pytest.mark.parametrize("data, line", [
        (b"", 1),
        (b"x\n", 1),
        (b"2\n0 1\n", 2),
        (b"2\n0 1\n1 a\n", 3),
        (b"2\n0 1\n1 0 1\n", 3),
    ])
    def test_format_errors_carry_line(self, data, line):
        """Parse errors report the offending line."""
        with pytest.raises(TableFormatError) as exc:
            load_table(data)
        assert exc.value.line == line
        assert str(exc.value).startswith(f"line {line}:")

    def test_missing_file(self, tmp_path):
        """A missing file is an input error."""
        with pytest.raises(TableFormatError):
            load_table(tmp_path / "nope.txt")

    def test_shipped_bad_table(self, tables_dir):
        """The shipped non-group table names the repeated row."""
        with pytest.raises(GroupValidationError) as exc:
            load_table(tables_dir / "bad_latin.txt")
        assert exc.value.kind == "latin-square"

    def test_bad_file(self, bad_table_file):
        """Tables that are not groups fail validation."""
        with pytest.raises(GroupValidationError):
            load_table(bad_table_file)


class TestSpecParser:
    """Test cases for the group-spec grammar."""

    @pytest.mark.parametrize("spec, order", [
        ("cyclic:12", 12),
        ("dihedral:5", 10),
        ("symmetric:4", 24),
        ("product:(cyclic:2),(cyclic:2)", 4),
        ("product:(cyclic:3),(symmetric:3)", 18),
        ("product:(product:(cyclic:2),(cyclic:2)),(cyclic:3)", 12),
    ])
    def test_orders(self, spec, order):
        """Every supported kind builds a group of the expected order."""
        group = parse_group_spec(spec)
        assert group.order == order
        assert group.name == spec

    def test_names_are_canonical(self):
        """Names come from the constructors, not from the raw spec text."""
        padded = parse_group_spec("product:(cyclic:02),(cyclic:2)")
        assert padded.name == "product:(cyclic:2),(cyclic:2)"
        assert parse_group_spec("cyclic:007").name == "cyclic:7"
        assert parse_group_spec("cyclic:7").name == "cyclic:7"

    def test_table_spec(self, tables_dir):
        """table:PATH loads the file."""
        assert parse_group_spec(f"table:{tables_dir / 'c2.txt'}").order == 2

    @pytest.mark.parametrize("spec", [
        "cyclic",
        "cyclic:",
        "cyclic:abc",
        "cyclic:0",
        "quaternion:8",
        "product:cyclic:2,cyclic:2",
        "product:(cyclic:2),(cyclic:2",
        "product:(cyclic:2)",
    ])
    def test_bad_specs(self, spec):
        """Malformed specs raise GroupSpecError."""
        with pytest.raises(GroupSpecError):
            parse_group_spec(spec)

    def test_catalog(self):
        """The catalog lists the named families."""
        entries = catalog()
        assert entries["cyclic"][0] == "cyclic:3"
        assert entries["cyclic"][-1] == "cyclic:64"
        assert entries["dihedral"][-1] == "dihedral:32"
        assert "product:(cyclic:3),(symmetric:3)" in entries["product"]
        assert all(parse_group_spec(spec).order >= 3 for spec in entries["symmetric"])
