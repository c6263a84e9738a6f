"""Configuration module for crossint-lab.

Settings are read from ``CROSSINT_*`` environment variables and an
optional ``.env`` file.
"""

from .settings import Settings, get_settings

__all__ = ["Settings", "get_settings"]
