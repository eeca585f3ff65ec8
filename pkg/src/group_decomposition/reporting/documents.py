"""
JSON documents emitted by the CLI.

Exact rationals are {"num", "den"} string pairs and big counts are strings,
so no consumer loses precision.
"""

from fractions import Fraction
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict


class Document(BaseModel):
    model_config = ConfigDict(extra="forbid")


class RationalModel(Document):
    num: str
    den: str

    @classmethod
    def from_fraction(cls, value: Fraction) -> "RationalModel":
        value = Fraction(value)
        return cls(num=str(value.numerator), den=str(value.denominator))


class GroupDocument(Document):
    """Summary printed by `group`."""
    spec: str
    order: int
    backend: str
    identity: int
    class_count: int
    center_size: int
    class_sizes: List[int]
    centralizer_sizes: Dict[str, int]
    commute_probability: RationalModel
    burnside_holds: bool


class ThetaResultModel(Document):
    theta: float
    residual: float
    bracket_width: float
    iterations: int


class ThetaBoundsModel(Document):
    lower_center: float
    lower_classes: float
    upper: float


class ThetaDocument(Document):
    """Output of `theta`."""
    spec: str
    n: int
    result: ThetaResultModel
    bounds: ThetaBoundsModel
    critical_size: float
    precise_theta: Optional[str] = None


class MomentsModel(Document):
    single_mean: RationalModel
    pair_mean: RationalModel
    k: int
    v_count: int


class PairBoundModel(Document):
    x: int
    y: int
    k: int
    delta: float
    delta_star: float
    upper: float
    lower: float
    baseline: float
    delta_cap: float


class SuenDocument(Document):
    """Output of `suen`."""
    spec: str
    n: int
    element: int
    element_label: str
    k: int
    delta: float
    delta_star: float
    upper: float
    lower: float
    baseline: float
    delta_cap: float
    moments: MomentsModel
    expected_miss_upper: float
    pair: Optional[PairBoundModel] = None


class SweepPointModel(Document):
    k: int
    trials: int
    successes: int
    p_hat: float
    ci_low: float
    ci_high: float


class SweepMetadata(Document):
    """Run metadata written next to a sweep CSV."""
    version: str
    group_spec: str
    variant: str
    master_seed: int
    m_ratio: float
    theta: Optional[float]
    critical_prediction: Optional[float]
    crossing_k: Optional[float]
    crossing_found: bool
    prediction_ratio: Optional[float]
    config: Dict[str, Any]
    points: Optional[List[SweepPointModel]] = None


class ExactValueDocument(Document):
    """Output of `oracle exact-single|exact-pair|exact-p`."""
    spec: str
    quantity: str
    parameters: Dict[str, Any]
    value: RationalModel
    approximate: float


class ExactDistributionDocument(Document):
    """Output of `oracle miss-distribution`."""
    spec: str
    k: int
    m: int
    variant: str
    total: str
    counts: Dict[str, str]
    mean: RationalModel
    success_probability: RationalModel


class MissStatsDocument(Document):
    """Output of `miss-stats`."""
    spec: str
    k: int
    m: int
    variant: str
    trials: int
    master_seed: int
    mean: float
    variance: float
    histogram: Dict[str, int]
    expected_miss_upper: Optional[float] = None


ALL_DOCUMENTS = {
    "group": GroupDocument,
    "theta": ThetaDocument,
    "suen": SuenDocument,
    "sweep_metadata": SweepMetadata,
    "exact_value": ExactValueDocument,
    "exact_distribution": ExactDistributionDocument,
    "miss_stats": MissStatsDocument,
}
