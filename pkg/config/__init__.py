"""Configuration module for the group decomposition toolkit."""

from .settings import settings

__all__ = ["settings"]
