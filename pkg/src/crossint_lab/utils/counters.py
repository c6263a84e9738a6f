"""Node and prune counters for the exact search.

Each search branch owns one collector; the engine merges them once all
branches finished. Counters are plain integers so collectors pickle
cleanly across worker processes.
"""

import logging
import time
from collections import defaultdict
from typing import Dict

logger = logging.getLogger(__name__)


class SearchCounters:
    """Collects node, prune and incumbent statistics for one search."""

    def __init__(self) -> None:
        self._counters: Dict[str, int] = defaultdict(int)
        self._start_time = time.perf_counter()
        self.best_seen = 0

    def record_node(self) -> None:
        """Record one visited node of the closed-pair tree."""
        self._counters["nodes_visited"] += 1

    def record_prune(self, reason: str) -> None:
        """Record a pruned subtree.

        :param reason: Which bound fired (``product``, ``dimension``,
            ``canonicity`` or ``root``)
        """
        self._counters["nodes_pruned"] += 1
        self._counters[f"pruned.{reason}"] += 1

    def record_incumbent(self, value: int) -> None:
        """Record a strictly better product found in this branch."""
        if value > self.best_seen:
            self.best_seen = value
            self._counters["incumbent_updates"] += 1
            logger.debug("Branch incumbent raised to %d", value)

    def merge(self, other: "SearchCounters") -> None:
        """Add another collector's counts into this one."""
        for key, count in other._counters.items():
            self._counters[key] += count
        self.best_seen = max(self.best_seen, other.best_seen)

    @property
    def nodes_visited(self) -> int:
        return self._counters["nodes_visited"]

    @property
    def nodes_pruned(self) -> int:
        return self._counters["nodes_pruned"]

    def elapsed_ms(self) -> float:
        return (time.perf_counter() - self._start_time) * 1000.0

    def get_metrics(self) -> Dict[str, int]:
        """Get all collected counters."""
        return dict(self._counters)

    def __getstate__(self) -> Dict[str, object]:
        return {
            "counters": dict(self._counters),
            "best_seen": self.best_seen,
        }

    def __setstate__(self, state: Dict[str, object]) -> None:
        self._counters = defaultdict(int, state["counters"])  # type: ignore[arg-type]
        self.best_seen = int(state["best_seen"])  # type: ignore[arg-type]
        self._start_time = time.perf_counter()
