"""Utility helpers for crossint-lab: logging setup, run context, counters."""

from .counters import SearchCounters
from .logging_setup import setup_logging
from .run_context import get_run_id, set_branch, set_run_id

__all__ = [
    "SearchCounters",
    "setup_logging",
    "get_run_id",
    "set_branch",
    "set_run_id",
]
