"""
Exact distribution of the miss set |S| over all draw tuples.

Tuples are grouped by their support: a support of size s arises from
s! S(k, s) of the n^k tuples (surjections onto it), so each support is
visited once with that multiplicity. Product sets are built with plain
nested loops over the table rows.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Any, Dict, Iterator, List, Optional, Tuple

from config.settings import settings
from ..exceptions import InputError, InstanceTooLargeError, InternalConsistencyError
from ..groups import FiniteGroup
from ..montecarlo.plans import Variant

logger = logging.getLogger(__name__)


@dataclass
class ExactDistribution:
    """Outcome counts of |S| over all n^(k+m) equally likely draw tuples."""
    total: int
    counts: Dict[int, int]
    element_miss_counts: List[int] = field(default_factory=list)

    def probability(self, value: int) -> Fraction:
        return Fraction(self.counts.get(value, 0), self.total)

    def mean(self) -> Fraction:
        """E|S|."""
        return Fraction(sum(value * count for value, count in self.counts.items()), self.total)

    def element_miss_probability(self, x: int) -> Fraction:
        """Pr[x in S]."""
        return Fraction(self.element_miss_counts[x], self.total)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "total": str(self.total),
            "counts": {str(value): str(count) for value, count in sorted(self.counts.items())},
            "element_miss_counts": [str(count) for count in self.element_miss_counts],
        }


def surjections(k: int, s: int) -> int:
    """Number of maps from k draws onto a fixed set of s elements."""
    return sum((-1) ** j * comb(s, j) * (s - j) ** k for j in range(s + 1))


def _supports(n: int, k: int) -> Iterator[Tuple[Tuple[int, ...], int]]:
    """(support, number of k-tuples with exactly that support), lexicographic by size."""
    for size in range(1, min(k, n) + 1):
        weight = surjections(k, size)
        for support in combinations(range(n), size):
            yield support, weight


def _check_outcomes(n: int, k: int, m: int, variant: Variant) -> int:
    if k < 1 or m < 1:
        raise InputError(f"k and m must be at least 1, got k={k}, m={m}")
    total = n ** k if variant is Variant.AA else n ** (k + m)
    limit = settings.oracle.max_outcomes
    if total > limit:
        raise InstanceTooLargeError(f"{total} draw tuples exceed the enumeration cap {limit}")
    return total


def _covered(rows: List[List[int]], a: Tuple[int, ...], b: Tuple[int, ...], variant: Variant) -> set:
    covered = set()
    if variant is Variant.AA:
        for left in a:
            row = rows[left]
            for right in a:
                covered.add(row[right])
        return covered
    for left in a:
        row = rows[left]
        for right in b:
            covered.add(row[right])
    if variant is Variant.BOTH:
        for left in b:
            row = rows[left]
            for right in a:
                covered.add(row[right])
    return covered


def exact_miss_distribution(g: FiniteGroup, k: int, m: Optional[int] = None,
                            variant=Variant.BOTH) -> ExactDistribution:
    """
    Full distribution of |S| (and per-element miss counts) by enumeration.

    Args:
        g: Group
        k: Draws for A
        m: Draws for B (defaults to k; unused for aa)
        variant: Product event

    Returns:
        ExactDistribution
    """
    variant = Variant(variant)
    m = k if m is None else m
    n = g.order
    total = _check_outcomes(n, k, m, variant)
    rows = g.cayley_table().tolist()
    counts: Counter = Counter()
    element_counts = [0] * n

    a_supports = list(_supports(n, k))
    b_supports = [((), 1)] if variant is Variant.AA else list(_supports(n, m))
    for a, a_weight in a_supports:
        for b, b_weight in b_supports:
            weight = a_weight * b_weight
            covered = _covered(rows, a, b, variant)
            counts[n - len(covered)] += weight
            if len(covered) < n:
                for x in range(n):
                    if x not in covered:
                        element_counts[x] += weight

    logger.debug(f"Enumerated {len(a_supports)} x {len(b_supports)} supports for {g.name} (k={k}, m={m})")
    result = ExactDistribution(total=total, counts=dict(counts), element_miss_counts=element_counts)
    if sum(result.counts.values()) != total:
        raise InternalConsistencyError("support weights do not add up to the number of draw tuples")
    return result


def exact_p(g: FiniteGroup, k: int, m: Optional[int] = None, variant=Variant.BOTH) -> Fraction:
    """Exact probability that the product set is all of G."""
    return exact_miss_distribution(g, k, m, variant).probability(0)


def exact_miss_probabilities(g: FiniteGroup, k: int, m: Optional[int] = None,
                             variant=Variant.BOTH) -> List[Fraction]:
    """Pr[x in S] for every x."""
    distribution = exact_miss_distribution(g, k, m, variant)
    return [distribution.element_miss_probability(x) for x in range(g.order)]
