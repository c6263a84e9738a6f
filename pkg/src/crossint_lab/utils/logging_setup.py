"""Logging configuration for crossint-lab.

Reports are written to standard output, so every log record goes to
standard error through a single run-aware handler.
"""

import logging
import sys

from .run_context import RunAwareFormatter, RunContextFilter

_LOGGING_CONFIGURED = False


def setup_logging(level: str = "WARNING", force: bool = False) -> None:
    """Set up logging with run context on standard error.

    Uses a singleton pattern to prevent duplicate handlers; ``force``
    reconfigures an already configured process (worker processes and
    tests use it).

    :param level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
    :type level: str
    :param force: Replace an existing configuration
    :type force: bool
    """
    global _LOGGING_CONFIGURED

    if _LOGGING_CONFIGURED and not force:
        logging.getLogger(__name__).debug(
            "Logging already configured, skipping duplicate setup"
        )
        return

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(RunAwareFormatter())
    handler.addFilter(RunContextFilter())

    logging.basicConfig(
        level=getattr(logging, level.upper()),
        handlers=[handler],
        force=True,
    )

    _LOGGING_CONFIGURED = True
    logging.getLogger(__name__).debug("Logging configured at %s", level)
