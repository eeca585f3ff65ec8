"""
Tests for the brute-force oracles on tiny groups.
"""

import sys
from fractions import Fraction
from math import factorial
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.group_decomposition.exceptions import InstanceTooLargeError
from src.group_decomposition.groups import build_cyclic, build_dihedral, parse_group_spec
from src.group_decomposition.montecarlo import Variant
from src.group_decomposition.oracle import (
    COLUMN,
    ROW,
    exact_miss_distribution,
    exact_miss_probabilities,
    exact_p,
    exact_pair_mean,
    exact_pair_mean_numerators,
    exact_single_mean,
    surjections,
)
from src.group_decomposition.structure import profile

TINY_GROUPS = [
    "cyclic:3",
    "cyclic:4",
    "cyclic:5",
    "cyclic:6",
    "cyclic:7",
    "cyclic:8",
    "dihedral:3",
    "dihedral:4",
    "product:(cyclic:2),(cyclic:2)",
]


class TestExactMoments:
    """Test cases for the counted indicator moments."""

    def test_symmetric_three(self, s3, transposition):
        """S_3: 5/18 for a transposition, 1/6 for the identity."""
        assert exact_single_mean(s3, transposition) == Fraction(5, 18)
        assert exact_single_mean(s3, 0) == Fraction(1, 6)

    def test_axes_agree(self, s3):
        """Row and column sharing give the same pair mean."""
        for x in range(s3.order):
            for y in range(s3.order):
                assert exact_pair_mean(s3, x, y, ROW) == exact_pair_mean(s3, x, y, COLUMN)

    @pytest.mark.parametrize("axis", [ROW, COLUMN])
    def test_numerators_match_scalar(self, d8, axis):
        """The matrix form equals the per-pair count."""
        numerators = exact_pair_mean_numerators(d8, axis)
        for x in range(d8.order):
            for y in range(d8.order):
                assert Fraction(int(numerators[x, y]), 8 ** 3) == exact_pair_mean(d8, x, y, axis)

    def test_numerators_match_profile(self, d8, d8_profile):
        """n^3 E = 4n - 2(|C(x)| + |C(y)|) + |C(x) ∩ C(y)|."""
        numerators = exact_pair_mean_numerators(d8)
        sizes = d8_profile.centralizer_sizes
        both = d8_profile.intersection_matrix()
        expected = 4 * 8 - 2 * (sizes[:, None] + sizes[None, :]) + both
        assert (numerators == expected).all()

    def test_bad_axis(self, s3):
        """Only row and column sharing exist."""
        with pytest.raises(ValueError):
            exact_pair_mean(s3, 0, 1, "diagonal")

    def test_order_caps(self):
        """Moment enumeration refuses large groups."""
        with pytest.raises(InstanceTooLargeError):
            exact_single_mean(build_cyclic(600), 0)
        with pytest.raises(InstanceTooLargeError):
            exact_pair_mean(build_cyclic(200), 0, 0)

    def test_element_range(self, s3):
        """Unknown elements raise IndexError."""
        with pytest.raises(IndexError):
            exact_single_mean(s3, 6)


class TestSurjections:
    """Test cases for the support multiplicities."""

    @pytest.mark.parametrize("k, s, expected", [(3, 1, 1), (3, 2, 6), (3, 3, 6), (4, 2, 14), (2, 3, 0)])
    def test_values(self, k, s, expected):
        """s! S(k, s)."""
        assert surjections(k, s) == expected

    def test_weights_cover_all_tuples(self):
        """sum over supports of surjection counts is n^k."""
        n, k = 6, 4
        total = sum(
            factorial(n) // (factorial(s) * factorial(n - s)) * surjections(k, s)
            for s in range(1, k + 1)
        )
        assert total == n ** k


class TestExactDistribution:
    """Test cases for the enumerated miss distribution."""

    def test_cyclic_two(self, c2):
        """C_2, k = 2 fails only when both supports are singletons."""
        assert exact_p(c2, 2) == Fraction(3, 4)

    def test_cyclic_three(self):
        """C_3, k = m = 2 succeeds with probability 4/9."""
        assert exact_p(build_cyclic(3), 2) == Fraction(4, 9)

    def test_distribution_sums(self, s3):
        """Counts add up to n^(2k) and probabilities to 1."""
        distribution = exact_miss_distribution(s3, 2)
        assert distribution.total == 6 ** 4
        assert sum(distribution.probability(v) for v in distribution.counts) == 1

    def test_mean_is_sum_of_element_misses(self, d8):
        """E|S| = sum_x Pr[x in S]."""
        distribution = exact_miss_distribution(d8, 3)
        assert distribution.mean() == sum(exact_miss_probabilities(d8, 3))

    def test_single_draw_matches_moments(self, s3):
        """With one draw each, Pr[x in S] = 1 - E[I(x)]."""
        probabilities = exact_miss_probabilities(s3, 1)
        for x in range(s3.order):
            assert probabilities[x] == 1 - exact_single_mean(s3, x)

    def test_class_symmetry(self, d8, d8_profile):
        """Conjugate elements are missed equally often."""
        probabilities = exact_miss_probabilities(d8, 3)
        for x in range(d8.order):
            for y in range(d8.order):
                if d8_profile.class_of[x] == d8_profile.class_of[y]:
                    assert probabilities[x] == probabilities[y]

    def test_monotone_in_k(self):
        """More draws never lower the success probability."""
        group = build_dihedral(3)
        values = [exact_p(group, k) for k in range(1, 5)]
        assert all(a <= b for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize("spec, k, m", [
        ("symmetric:3", 1, 3),
        ("symmetric:3", 2, 4),
        ("dihedral:4", 1, 3),
        ("cyclic:5", 2, 3),
    ])
    def test_symmetric_in_a_and_b(self, spec, k, m):
        """Exchanging the sizes of A and B leaves Pr[AB ∪ BA = G] unchanged."""
        group = parse_group_spec(spec)
        assert exact_p(group, k, m) == exact_p(group, m, k)

    @pytest.mark.parametrize("spec", ["symmetric:3", "cyclic:5", "dihedral:3"])
    def test_monotone_in_m(self, spec):
        """More draws for B never lower the success probability."""
        group = parse_group_spec(spec)
        values = [exact_p(group, 2, m) for m in range(1, 5)]
        assert all(a <= b for a, b in zip(values, values[1:]))

    def test_variant_ordering(self, s3):
        """Pr[AB = G] <= Pr[AB ∪ BA = G]."""
        assert exact_p(s3, 3, variant=Variant.AB_ONLY) <= exact_p(s3, 3, variant=Variant.BOTH)

    def test_abelian_variants_agree(self):
        """AB = BA in an abelian group."""
        group = build_cyclic(5)
        assert exact_p(group, 3, variant="ab-only") == exact_p(group, 3)

    def test_unequal_sizes(self):
        """m = 1 on C_3: B = {b}, so AB ∪ BA = G needs A = G."""
        assert exact_p(build_cyclic(3), 3, m=1) == Fraction(surjections(3, 3), 27)

    def test_aa_variant(self):
        """AA on C_2 with two draws needs both elements drawn."""
        # A = {0}: AA = {0}; A = {1}: AA = {0}; A = {0, 1}: AA = G
        assert exact_p(build_cyclic(2), 2, variant=Variant.AA) == Fraction(2, 4)

    def test_to_dict_uses_strings(self, c2):
        """Big counts are serialized as strings."""
        data = exact_miss_distribution(c2, 2).to_dict()
        assert data["total"] == "16"
        assert data["counts"]["0"] == "12"

    def test_outcome_cap(self):
        """n^(k+m) above the cap is refused; n^12 = 4^12 is allowed."""
        with pytest.raises(InstanceTooLargeError):
            exact_miss_distribution(build_cyclic(10), 5)
        assert exact_miss_distribution(build_cyclic(4), 6).total == 4 ** 12

    def test_invalid_draws(self, c2):
        """k and m must be positive."""
        with pytest.raises(ValueError):
            exact_p(c2, 0)

    @pytest.mark.slow
    @pytest.mark.parametrize("spec", TINY_GROUPS)
    def test_catalog_distributions(self, spec):
        """Every tiny group at k <= 3 yields a consistent distribution."""
        group = parse_group_spec(spec)
        p = profile(group)
        for k in range(1, 4):
            distribution = exact_miss_distribution(group, k)
            assert distribution.total == group.order ** (2 * k)
            assert distribution.mean() == sum(
                distribution.element_miss_probability(x) for x in range(group.order)
            )
            for x in range(group.order):
                same = [y for y in range(group.order) if p.class_of[y] == p.class_of[x]]
                assert all(
                    distribution.element_miss_counts[y] == distribution.element_miss_counts[x]
                    for y in same
                )
