"""Exact rational matrices.

All linear algebra in the lab runs over ``fractions.Fraction`` so pivots,
ranks and the duality relation are exact. Matrices are immutable and
hashable.
"""

from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

from ..exceptions import StructuralError

Scalar = Union[int, Fraction]


class RationalMatrix:
    """Immutable m×c matrix over the rationals."""

    __slots__ = ("_rows", "_ncols")

    def __init__(self, rows: Iterable[Iterable[Scalar]], ncols: int = -1):
        built = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if built:
            width = len(built[0])
            if any(len(r) != width for r in built):
                raise StructuralError("Ragged matrix rows", "rows")
            if ncols >= 0 and ncols != width:
                raise StructuralError(
                    f"Declared {ncols} columns, rows have {width}", "ncols"
                )
            ncols = width
        elif ncols < 0:
            ncols = 0
        self._rows: Tuple[Tuple[Fraction, ...], ...] = built
        self._ncols = ncols

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RationalMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, size: int) -> "RationalMatrix":
        return cls(
            [[1 if i == j else 0 for j in range(size)] for i in range(size)],
            size,
        )

    @property
    def rows(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return self._rows

    @property
    def nrows(self) -> int:
        return len(self._rows)

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.nrows, self._ncols)

    def __getitem__(self, index: Tuple[int, int]) -> Fraction:
        i, j = index
        return self._rows[i][j]

    def row(self, i: int) -> Tuple[Fraction, ...]:
        return self._rows[i]

    def column(self, j: int) -> Tuple[Fraction, ...]:
        return tuple(r[j] for r in self._rows)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            [self.column(j) for j in range(self._ncols)], self.nrows
        )

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self._ncols != other.nrows:
            raise StructuralError(
                f"Cannot multiply {self.shape} by {other.shape}", "shape"
            )
        cols = [other.column(j) for j in range(other.ncols)]
        return RationalMatrix(
            [
                [sum((a * b for a, b in zip(r, c)), Fraction(0)) for c in cols]
                for r in self._rows
            ],
            other.ncols,
        )

    def permute_columns(self, order: Sequence[int]) -> "RationalMatrix":
        """New matrix whose column t is this matrix's column ``order[t]``."""
        return RationalMatrix(
            [[r[j] for j in order] for r in self._rows], len(order)
        )

    def select_rows(self, indices: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix([self._rows[i] for i in indices], self._ncols)

    def stack(self, other: "RationalMatrix") -> "RationalMatrix":
        """Rows of ``self`` followed by rows of ``other``."""
        if self.nrows and other.nrows and self._ncols != other.ncols:
            raise StructuralError("Column counts differ", "ncols")
        return RationalMatrix(self._rows + other.rows, max(self._ncols, other.ncols))

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for r in self._rows for x in r)

    def to_lists(self) -> List[List[str]]:
        """Entries as strings (``"1"``, ``"-1/2"``) for JSON output."""
        return [[str(x) for x in r] for r in self._rows]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self._ncols == other._ncols and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._ncols, self._rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self._rows)
        return f"RationalMatrix({self.nrows}x{self._ncols}: [{body}])"
