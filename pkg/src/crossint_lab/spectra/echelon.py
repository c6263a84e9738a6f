"""Exact Gauss–Jordan elimination over the rationals."""

import logging
from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence

from ..exceptions import ParameterError
from ..models.matrices import RationalMatrix
from ..models.spectra import EchelonForm

logger = logging.getLogger(__name__)


def rref(
    m: RationalMatrix,
    allow_col_perm: bool = False,
    column_order: Optional[Sequence[int]] = None,
) -> EchelonForm:
    """Compute the reduced row echelon form of ``m`` exactly.

    Columns are scanned in ``column_order`` (default left to right); each
    scanned column with a nonzero entry among the unused rows becomes a
    pivot. The result keeps the input's column order. With
    ``allow_col_perm`` the recorded ``col_perm`` lists the pivot columns
    first, so that the permuted matrix starts with an identity block;
    otherwise ``col_perm`` is the identity.

    Example:
        >>> form = rref(RationalMatrix([[1, 0, 1], [1, 1, 1]]))
        >>> form.matrix.to_lists()
        [['1', '0', '1'], ['0', '1', '0']]

    :param m: Input matrix
    :param allow_col_perm: Record a pivots-first column permutation
    :param column_order: Order in which columns are scanned for pivots
    :return: The echelon form with pivots, rank and row operations
    """
    nrows, ncols = m.shape
    order = list(range(ncols)) if column_order is None else list(column_order)
    if sorted(order) != list(range(ncols)):
        raise ParameterError(
            "column_order must be a permutation of the columns",
            "column_order",
            order,
        )

    rows: List[List[Fraction]] = [list(r) for r in m.rows]
    ops: List[List[Fraction]] = [
        [Fraction(int(i == j)) for j in range(nrows)] for i in range(nrows)
    ]
    pivots: List[int] = []
    top = 0
    for col in order:
        if top == nrows:
            break
        pivot_row = next(
            (i for i in range(top, nrows) if rows[i][col] != 0), None
        )
        if pivot_row is None:
            continue
        rows[top], rows[pivot_row] = rows[pivot_row], rows[top]
        ops[top], ops[pivot_row] = ops[pivot_row], ops[top]
        scale = rows[top][col]
        rows[top] = [x / scale for x in rows[top]]
        ops[top] = [x / scale for x in ops[top]]
        for i in range(nrows):
            factor = rows[i][col]
            if i != top and factor != 0:
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[top])]
                ops[i] = [x - factor * y for x, y in zip(ops[i], ops[top])]
        pivots.append(col)
        top += 1

    rank = len(pivots)
    if allow_col_perm:
        pivot_set = set(pivots)
        col_perm = tuple(pivots + [c for c in order if c not in pivot_set])
    else:
        col_perm = tuple(range(ncols))
    return EchelonForm(
        matrix=RationalMatrix(rows[:rank], ncols),
        pivot_cols=tuple(pivots),
        col_perm=col_perm,
        rank=rank,
        transform=RationalMatrix(ops[:rank], nrows),
    )


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals of an integer matrix, fraction-free.

    Used on hot paths of the search where building Fractions would
    dominate the cost.
    """
    work = [list(r) for r in rows if any(r)]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        pivot_row = next(
            (i for i in range(rank, len(work)) if work[i][col]), None
        )
        if pivot_row is None:
            continue
        work[rank], work[pivot_row] = work[pivot_row], work[rank]
        p = work[rank]
        for i in range(rank + 1, len(work)):
            f = work[i][col]
            if f:
                row = [p[col] * x - f * y for x, y in zip(work[i], p)]
                g = 0
                for x in row:
                    g = gcd(g, x)
                work[i] = [x // g for x in row] if g > 1 else row
        rank += 1
        if rank == len(work):
            break
    return rank


def coefficient_bound(m: RationalMatrix) -> int:
    """Return 2^rank(m), the number of 0/1 points a span can hold."""
    return 2 ** rref(m).rank
