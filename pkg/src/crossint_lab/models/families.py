"""Pydantic models for subsets, families and cross pairs.

A subset of the ground set [n] is a plain ``int`` mask (a ``SubsetMask``):
element i ∈ [n] is bit i−1. Families store their members as a sorted,
duplicate-free tuple of masks, which is also their canonical encoding.
"""

from typing import FrozenSet, Iterable, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator

from ..exceptions import ParameterError, StructuralError

MAX_GROUND_SET = 24
"""Masks of every ground set fit one machine word."""

SubsetMask = int


def mask_of(elements: Iterable[int]) -> SubsetMask:
    """Encode 1-based elements as a mask.

    :param elements: Elements of [n], 1-based
    :return: Mask with bit i−1 set for every element i
    :raises StructuralError: If an element is not positive
    """
    mask = 0
    for e in elements:
        if e < 1:
            raise StructuralError(f"Element {e} is not in [n]", "elements")
        mask |= 1 << (e - 1)
    return mask


def elements_of(mask: SubsetMask) -> Tuple[int, ...]:
    """Decode a mask into its ascending 1-based elements."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


class Family(BaseModel):
    """A deduplicated, canonically ordered family over [n].

    Members are stored in ascending numeric mask order; construction from
    any iterable sorts and deduplicates.

    :param n: Ground-set size, n ≤ 24; n = 0 only arises from
        normalizing a pair whose elements were all peeled
    :type n: int
    :param members: Member masks in ascending order
    :type members: Tuple[int, ...]
    """

    model_config = ConfigDict(frozen=True)

    n: int
    members: Tuple[int, ...] = ()

    @model_validator(mode="before")
    @classmethod
    def canonicalize(cls, data: object) -> object:
        """Sort and deduplicate members before field validation."""
        if isinstance(data, dict) and "members" in data:
            data = dict(data)
            data["members"] = tuple(sorted(set(data["members"])))
        return data

    @model_validator(mode="after")
    def check_ground_set(self) -> "Family":
        """Reject ground sets out of range and members outside the low n bits."""
        if not 0 <= self.n <= MAX_GROUND_SET:
            raise StructuralError(
                f"Ground set size must lie in [0, {MAX_GROUND_SET}], "
                f"got {self.n}",
                "n",
            )
        if self.members and (
            self.members[0] < 0 or self.members[-1] >> self.n
        ):
            raise StructuralError(
                f"Member outside the ground set [{self.n}]", "members"
            )
        return self

    @classmethod
    def of(cls, n: int, members: Iterable[SubsetMask]) -> "Family":
        """Build a family from masks."""
        return cls(n=n, members=tuple(members))

    @classmethod
    def from_sets(cls, n: int, sets: Iterable[Iterable[int]]) -> "Family":
        """Build a family from collections of 1-based elements.

        Example:
            >>> Family.from_sets(3, [{1, 3}, {2}]).members
            (2, 5)
        """
        masks = [mask_of(s) for s in sets]
        return cls(n=n, members=tuple(masks))

    @classmethod
    def power_set(cls, n: int, support: SubsetMask) -> "Family":
        """All subsets of ``support`` as a family over [n]."""
        return cls.of(n, submasks(support))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, mask: object) -> bool:
        return mask in self.members

    def as_sets(self) -> List[FrozenSet[int]]:
        """Members as frozensets of 1-based elements, canonical order."""
        return [frozenset(elements_of(m)) for m in self.members]

    @property
    def universe_mask(self) -> int:
        """The family as a bitmask over the 2^n subsets of [n]."""
        out = 0
        for m in self.members:
            out |= 1 << m
        return out


def submasks(support: SubsetMask) -> List[SubsetMask]:
    """All submasks of ``support`` in ascending order."""
    out = []
    sub = 0
    while True:
        out.append(sub)
        if sub == support:
            break
        sub = (sub - support) & support
    return out


class CrossPair(BaseModel):
    """Two families over a shared ground set plus the target ℓ.

    The ``verified`` flag is a cache: it becomes true only after
    ``is_cross_intersecting`` confirmed |A∩B| = ℓ for every cross pair.

    :param a: The A-side family
    :param b: The B-side family
    :param ell: Required intersection size, ℓ ≥ 0
    :param n: Ground-set size shared by both families
    """

    model_config = ConfigDict(frozen=True)

    a: Family
    b: Family
    ell: int = Field(..., description="Required intersection size")
    n: int

    _verified: bool = PrivateAttr(default=False)

    @model_validator(mode="after")
    def check_shared_ground_set(self) -> "CrossPair":
        """Both families must live on [n] and ℓ must be nonnegative."""
        if self.ell < 0:
            raise ParameterError("ell must be nonnegative", "ell", self.ell)
        if self.a.n != self.n or self.b.n != self.n:
            raise StructuralError(
                f"Families live on [{self.a.n}] and [{self.b.n}], "
                f"pair declares [{self.n}]",
                "n",
            )
        return self

    @classmethod
    def build(
        cls, a: Family, b: Family, ell: int, verified: bool = False
    ) -> "CrossPair":
        """Pair two families, taking n from the A side.

        Pass ``verified=True`` only when the pair is cross-intersecting
        by construction.
        """
        pair = cls(a=a, b=b, ell=ell, n=a.n)
        return pair.mark_verified() if verified else pair

    def mark_verified(self) -> "CrossPair":
        """Record that the pair is known to be cross-intersecting."""
        self._verified = True
        return self

    def __eq__(self, other: object) -> bool:
        # The verification cache is not part of a pair's identity.
        if not isinstance(other, CrossPair):
            return NotImplemented
        return (self.n, self.ell, self.a, self.b) == (
            other.n,
            other.ell,
            other.a,
            other.b,
        )

    def __hash__(self) -> int:
        return hash((self.n, self.ell, self.a.members, self.b.members))

    @property
    def verified(self) -> bool:
        return self._verified

    @property
    def product(self) -> int:
        return len(self.a) * len(self.b)

    def swapped(self) -> "CrossPair":
        """The same pair with the A and B roles exchanged."""
        out = CrossPair(a=self.b, b=self.a, ell=self.ell, n=self.n)
        out._verified = self._verified
        return out


class ReductionTrace(BaseModel):
    """Record of the elements peeled by ``normalize_pair``.

    :param removed_from_a_side: Elements deleted because no B contains
        them (the free 2^X factor on the A side), 1-based
    :param removed_from_b_side: Elements deleted because no A contains
        them (the free 2^Y factor on the B side), 1-based
    :param kept_elements: Original labels of the reduced elements 1..n′
    :param original_n: Ground-set size before the reduction
    :param reduced_n: Ground-set size after the reduction
    """

    model_config = ConfigDict(frozen=True)

    removed_from_a_side: Tuple[int, ...] = ()
    removed_from_b_side: Tuple[int, ...] = ()
    kept_elements: Tuple[int, ...] = ()
    original_n: int
    reduced_n: int

    @model_validator(mode="after")
    def check_accounting(self) -> "ReductionTrace":
        """Removed lists are disjoint and all elements are accounted for."""
        if set(self.removed_from_a_side) & set(self.removed_from_b_side):
            raise StructuralError(
                "An element cannot be peeled from both sides", "removed"
            )
        removed = len(self.removed_from_a_side) + len(
            self.removed_from_b_side
        )
        if self.original_n != self.reduced_n + removed:
            raise StructuralError(
                "original_n must equal reduced_n plus removed elements",
                "reduced_n",
            )
        return self

    @property
    def is_empty(self) -> bool:
        return not (self.removed_from_a_side or self.removed_from_b_side)
