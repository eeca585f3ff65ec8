"""Centralizers, conjugacy classes, the center and the commute probability."""

from .profile import CentralizerProfile, profile, commute_probability

__all__ = ["CentralizerProfile", "profile", "commute_probability"]
