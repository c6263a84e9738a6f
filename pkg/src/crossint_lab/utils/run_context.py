"""Run-aware logging utilities.

Every command-line invocation and every search worker carries a short run
id in a context variable. A logging filter injects it into each record so
that interleaved output from parallel search branches can be told apart.

Example log output:
    INFO [run=3f2a9c1e] [branch=root-4] crossint_lab.search.engine: ...
"""

import logging
import uuid
from contextvars import ContextVar
from typing import Optional

run_id_var: ContextVar[Optional[str]] = ContextVar("run_id", default=None)
branch_var: ContextVar[Optional[str]] = ContextVar("branch", default=None)


class RunContextFilter(logging.Filter):
    """Logging filter that adds run and branch ids to log records."""

    def filter(self, record: logging.LogRecord) -> bool:
        """Add run and branch ids to the record.

        :param record: Log record to enhance
        :return: True to allow the record through
        """
        run_id = run_id_var.get()
        if not run_id:
            run_id = set_run_id()
        branch = branch_var.get()
        record.run_id = run_id
        record.branch = branch or "main"
        return True


class RunAwareFormatter(logging.Formatter):
    """Formatter that prints run and branch context before the message.

    Format:
        LEVEL [run=abc12345] [branch=root-3] logger: message
    """

    def __init__(self, include_branch: bool = True):
        """Initialize the formatter.

        :param include_branch: Include the search branch label
        """
        parts = ["%(levelname)s", "[run=%(run_id)s]"]
        if include_branch:
            parts.append("[branch=%(branch)s]")
        parts.append("%(name)s: %(message)s")
        super().__init__(" ".join(parts))


def set_run_id(run_id: Optional[str] = None) -> str:
    """Set the run id for the current context.

    :param run_id: Run id to set (generates one if None)
    :return: The run id now in effect
    """
    if not run_id:
        run_id = uuid.uuid4().hex[:8]
    run_id_var.set(run_id)
    return run_id


def get_run_id() -> Optional[str]:
    """Get the run id of the current context."""
    return run_id_var.get()


def set_branch(label: Optional[str]) -> None:
    """Label log records of the current context with a search branch."""
    branch_var.set(label)
