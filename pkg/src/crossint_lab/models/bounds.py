"""Models used by the counting bounds."""

from fractions import Fraction
from typing import Tuple

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from ..exceptions import StructuralError


class IntervalUnion(BaseModel):
    """Union of pairwise disjoint half-open intervals [lo, hi).

    Endpoints are exact rationals; intervals are kept sorted.

    :param intervals: (lo, hi) pairs, lo < hi
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    intervals: Tuple[Tuple[Fraction, Fraction], ...] = ()

    @field_validator("intervals", mode="before")
    @classmethod
    def coerce_endpoints(cls, v: object) -> object:
        """Convert endpoints to Fractions and sort by left endpoint."""
        if isinstance(v, (list, tuple)):
            pairs = [(Fraction(lo), Fraction(hi)) for lo, hi in v]
            return tuple(sorted(pairs))
        return v

    @model_validator(mode="after")
    def check_disjoint(self) -> "IntervalUnion":
        prev_hi = None
        for lo, hi in self.intervals:
            if lo >= hi:
                raise StructuralError(
                    f"Empty interval [{lo}, {hi})", "intervals"
                )
            if prev_hi is not None and lo < prev_hi:
                raise StructuralError(
                    "Intervals must be pairwise disjoint", "intervals"
                )
            prev_hi = hi
        return self

    def __len__(self) -> int:
        return len(self.intervals)

    def __contains__(self, x: object) -> bool:
        return any(lo <= x < hi for lo, hi in self.intervals)  # type: ignore[operator]

    @property
    def max_width(self) -> Fraction:
        return max((hi - lo for lo, hi in self.intervals), default=Fraction(0))
