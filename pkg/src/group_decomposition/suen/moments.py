"""
Exact first and second moments of the product indicators.

For v = (i, j) in [k] x [k], I_v(x) = 1 when x = a_i b_j or x = b_j a_i.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict

from ..exceptions import InputError
from ..structure import CentralizerProfile
from ..utils import fraction_to_dict


@dataclass(frozen=True)
class IndicatorMoments:
    """E[I_v(x)] and E[I_v(x) I_u(x)] for adjacent v, u."""
    single_mean: Fraction
    pair_mean: Fraction
    k: int

    @property
    def v_count(self) -> int:
        return self.k * self.k

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        return {
            "single_mean": fraction_to_dict(self.single_mean),
            "pair_mean": fraction_to_dict(self.pair_mean),
            "k": self.k,
            "v_count": self.v_count,
        }


def single_mean(p: CentralizerProfile, x: int) -> Fraction:
    """(2/n)(1 - |C(x)|/(2n)), i.e. (2n - |C(x)|)/n^2."""
    n = p.order
    return Fraction(2 * n - p.centralizer_size(x), n * n)


def pair_mean(p: CentralizerProfile, x: int, y: int) -> Fraction:
    """
    E[I_v(x) I_u(y)] for v, u sharing a row or a column.

    (4/n^2)(1 - (|C(x)| + |C(y)|)/(2n) + |C(x) ∩ C(y)|/(4n)), i.e.
    (4n - 2(|C(x)| + |C(y)|) + |C(x) ∩ C(y)|)/n^3.
    """
    n = p.order
    cx = p.centralizer_size(x)
    cy = p.centralizer_size(y)
    cxy = p.intersection_size(x, y)
    return Fraction(4 * n - 2 * (cx + cy) + cxy, n ** 3)


def shared_vertex_mean(p: CentralizerProfile, x: int, y: int) -> Fraction:
    """
    E[I_v(x) I_v(y)] for x != y and the same v.

    Both hold only when ab = x and ba = y (or the reverse), which needs x and
    y conjugate; then |C(x)| choices of a work for each order.
    """
    if x == y:
        raise InputError("shared_vertex_mean needs two distinct elements")
    p._check_element(x)
    p._check_element(y)
    if p.class_of[x] != p.class_of[y]:
        return Fraction(0)
    n = p.order
    return Fraction(2 * p.centralizer_size(x), n * n)


def indicator_moments(p: CentralizerProfile, x: int, k: int) -> IndicatorMoments:
    return IndicatorMoments(single_mean=single_mean(p, x), pair_mean=pair_mean(p, x, x), k=k)
