"""Test package for crossint-lab."""
