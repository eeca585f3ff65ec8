"""Test suite for group_decomposition."""
