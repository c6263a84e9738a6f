"""Result models for the exact linear-algebra analysis."""

from typing import Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from ..exceptions import StructuralError
from .matrices import RationalMatrix


class EchelonForm(BaseModel):
    """Reduced row echelon form with its bookkeeping.

    ``matrix`` is kept in the input's column order; ``col_perm`` is only
    recorded. ``matrix.permute_columns(col_perm)`` is the form with the
    identity block in front. ``transform`` holds the accumulated row
    operations, so ``transform @ input == matrix`` exactly.

    :param matrix: Nonzero rows of the reduced form
    :param pivot_cols: Pivot column of each row, 0-based, ascending in
        the elimination order
    :param col_perm: Column order placing pivots first (or identity)
    :param rank: Number of pivots
    :param transform: Row-operation matrix (rank × input rows)
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    matrix: RationalMatrix
    pivot_cols: Tuple[int, ...]
    col_perm: Tuple[int, ...]
    rank: int
    transform: RationalMatrix

    @model_validator(mode="after")
    def check_rank(self) -> "EchelonForm":
        if self.rank != len(self.pivot_cols) or self.rank != self.matrix.nrows:
            raise StructuralError(
                "rank must equal the number of pivots and rows", "rank"
            )
        if sorted(self.col_perm) != list(range(self.matrix.ncols)):
            raise StructuralError("col_perm is not a permutation", "col_perm")
        return self

    @property
    def ncols(self) -> int:
        return self.matrix.ncols

    def permuted(self) -> RationalMatrix:
        """The reduced matrix with columns in ``col_perm`` order."""
        return self.matrix.permute_columns(self.col_perm)


class RowClassification(BaseModel):
    """Partition of matrix rows produced by the heavy-column process.

    :param r_rows: Rows removed by column selections, 0-based
    :param s_rows: Remaining rows that are not 0/±1 rows with a −1
    :param c_rows: Remaining 0/±1 rows containing a −1
    :param selection_log: (column, rows removed) per selection, 0-based
    """

    model_config = ConfigDict(frozen=True)

    r_rows: Tuple[int, ...] = ()
    s_rows: Tuple[int, ...] = ()
    c_rows: Tuple[int, ...] = ()
    selection_log: Tuple[Tuple[int, Tuple[int, ...]], ...] = ()

    @property
    def r(self) -> int:
        return len(self.r_rows)

    @property
    def s(self) -> int:
        return len(self.s_rows)

    @property
    def c(self) -> int:
        return len(self.c_rows)

    @property
    def selected_columns(self) -> Tuple[int, ...]:
        return tuple(col for col, _ in self.selection_log)
