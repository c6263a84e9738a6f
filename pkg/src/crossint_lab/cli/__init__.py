"""Command-line interface for crossint-lab."""

from .main import build_parser, main, run

__all__ = ["build_parser", "main", "run"]
