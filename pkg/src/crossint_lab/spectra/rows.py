"""Heavy-column row classification.

Rows are removed in rounds: each round picks a column holding at least two
nonzero entries among the rows still active and moves all of those rows
into R. When no such column is left, the survivors split into C (0/±1 rows
with at least one −1) and S (everything else, zero rows included).
"""

import logging
from typing import List, Literal, Sequence, Set, Tuple

from ..exceptions import ParameterError
from ..models.matrices import RationalMatrix
from ..models.spectra import RowClassification

logger = logging.getLogger(__name__)

Strategy = Literal["max-column", "first-column"]
STRATEGIES = ("max-column", "first-column")


def _column_hits(m: RationalMatrix, active: Set[int], col: int) -> List[int]:
    return [i for i in sorted(active) if m[i, col] != 0]


def _finish(
    m: RationalMatrix,
    removed: List[int],
    active: Set[int],
    log: List[Tuple[int, Tuple[int, ...]]],
) -> RowClassification:
    s_rows: List[int] = []
    c_rows: List[int] = []
    for i in sorted(active):
        row = m.row(i)
        signed = all(x in (0, 1, -1) for x in row) and any(
            x == -1 for x in row
        )
        (c_rows if signed else s_rows).append(i)
    return RowClassification(
        r_rows=tuple(removed),
        s_rows=tuple(s_rows),
        c_rows=tuple(c_rows),
        selection_log=tuple(log),
    )


def classify_rows(
    m: RationalMatrix, strategy: Strategy = "max-column"
) -> RowClassification:
    """Partition the rows of ``m`` into R, S and C.

    ``max-column`` picks the column with the most nonzeros among the
    active rows, lowest index on ties; ``first-column`` picks the lowest
    column with at least two.

    :param m: Matrix to classify
    :param strategy: Column selection rule
    :return: The partition and the selection log
    :raises ParameterError: For an unknown strategy
    """
    if strategy not in STRATEGIES:
        raise ParameterError(
            f"strategy must be one of {STRATEGIES}", "strategy", strategy
        )
    active = set(range(m.nrows))
    removed: List[int] = []
    log: List[Tuple[int, Tuple[int, ...]]] = []
    while True:
        best_col = -1
        best_rows: List[int] = []
        for col in range(m.ncols):
            hits = _column_hits(m, active, col)
            if len(hits) < 2:
                continue
            if strategy == "first-column":
                best_col, best_rows = col, hits
                break
            if len(hits) > len(best_rows):
                best_col, best_rows = col, hits
        if best_col < 0:
            break
        removed.extend(best_rows)
        active.difference_update(best_rows)
        log.append((best_col, tuple(best_rows)))
    logger.debug("Row classification log: %s", log)
    return _finish(m, removed, active, log)


def replay_selection(
    m: RationalMatrix, columns: Sequence[int]
) -> RowClassification:
    """Re-run the process with a fixed column sequence.

    Feeding the columns of a previous ``selection_log`` reproduces its R.
    """
    active = set(range(m.nrows))
    removed: List[int] = []
    log: List[Tuple[int, Tuple[int, ...]]] = []
    for col in columns:
        hits = _column_hits(m, active, col)
        removed.extend(hits)
        active.difference_update(hits)
        log.append((col, tuple(hits)))
    return _finish(m, removed, active, log)
