"""
Validated trial plans.
"""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from ..utils import MAX_SEED


class Variant(str, Enum):
    """Which product event counts as a success."""
    BOTH = "both"          # AB ∪ BA = G
    AB_ONLY = "ab-only"    # AB = G
    AA = "aa"              # AA = G


class TrialPlan(BaseModel):
    """k draws for A, m draws for B (m defaults to k), repeated `trials` times."""
    model_config = ConfigDict(extra="forbid", frozen=True, use_enum_values=False)

    group_spec: str
    k: int = Field(ge=1)
    m: Optional[int] = Field(default=None, ge=1)
    variant: Variant = Variant.BOTH
    trials: int = Field(ge=1)
    master_seed: int = Field(ge=0, le=MAX_SEED)

    @property
    def b_draws(self) -> int:
        return self.k if self.m is None else self.m
