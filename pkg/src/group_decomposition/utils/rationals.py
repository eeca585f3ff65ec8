"""Exact rational helpers for JSON output."""

from fractions import Fraction
from typing import Dict, Union


def fraction_to_dict(value: Union[Fraction, int]) -> Dict[str, str]:
    """{"num": "...", "den": "..."} with string-encoded integers."""
    value = Fraction(value)
    return {"num": str(value.numerator), "den": str(value.denominator)}


def fraction_from_dict(data: Dict[str, str]) -> Fraction:
    return Fraction(int(data["num"]), int(data["den"]))
