"""Configuration settings for crossint-lab.

This module defines the runtime configuration of the laboratory: the
search size cap, worker defaults, pruning thresholds and logging level.
Settings are loaded from environment variables and ``.env`` files.
"""

from typing import Literal

from pydantic import Field, ValidationError, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from ..exceptions import ConfigurationError

ABSOLUTE_MAX_N = 12
"""Largest ground set the exact search will ever accept."""


class Settings(BaseSettings):
    """Application settings loaded from environment variables.

    :param log_level: Logging level for the application
    :type log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
    :param hard_cap: Largest n accepted by the exact search
    :type hard_cap: int
    :param default_workers: Worker processes used when none are requested
    :type default_workers: int
    :param dimension_prune_min_n: Smallest n at which the span-dimension
        prune is switched on automatically
    :type dimension_prune_min_n: int
    :param incumbent_sync_interval: Nodes between reads of the incumbent
        shared by search workers
    :type incumbent_sync_interval: int
    :param selftest_rounds: Rounds per randomized property in ``selftest``
    :type selftest_rounds: int
    :param naive_oracle_max_n: Largest n for the brute-force oracle
    :type naive_oracle_max_n: int
    """

    model_config = SettingsConfigDict(
        env_prefix="CROSSINT_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = (
        Field("WARNING", description="Logging level")
    )

    hard_cap: int = Field(
        8, description="Largest ground set accepted by the exact search"
    )
    default_workers: int = Field(
        1, ge=1, description="Search worker processes by default"
    )
    dimension_prune_min_n: int = Field(
        7,
        ge=1,
        description="Switch the span-dimension prune on from this n",
    )
    incumbent_sync_interval: int = Field(
        512,
        ge=1,
        description="Nodes between reads of the shared incumbent",
    )
    selftest_rounds: int = Field(
        200, ge=1, description="Rounds per randomized selftest property"
    )
    naive_oracle_max_n: int = Field(
        4, ge=1, le=5, description="Largest n for the brute-force oracle"
    )

    @field_validator("log_level", mode="before")
    @classmethod
    def normalize_log_level(cls, v: object) -> object:
        """Accept log levels in any case.

        :param v: Raw value from the environment
        :return: Upper-cased level name
        """
        if isinstance(v, str):
            return v.upper()
        return v

    @field_validator("hard_cap")
    @classmethod
    def validate_hard_cap(cls, v: int) -> int:
        """Keep the search cap inside [1, ABSOLUTE_MAX_N].

        :param v: Requested cap
        :return: The validated cap
        :raises ValueError: If the cap is out of range
        """
        if not 1 <= v <= ABSOLUTE_MAX_N:
            raise ValueError(
                f"hard_cap must lie in [1, {ABSOLUTE_MAX_N}], got {v}"
            )
        return v


def get_settings() -> Settings:
    """Load settings from the current environment.

    Settings are rebuilt on every call so that command-line runs and
    tests observe the environment as it is at call time.

    :return: Validated settings
    :raises ConfigurationError: If any variable fails validation
    """
    try:
        return Settings()
    except ValidationError as e:
        first = e.errors()[0]
        setting = ".".join(str(part) for part in first.get("loc", ()))
        raise ConfigurationError(
            f"Invalid configuration: {first.get('msg', str(e))}",
            setting=setting or None,
        ) from e
