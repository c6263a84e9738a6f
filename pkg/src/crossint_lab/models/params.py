"""Parameter models for the canonical and matrix-based constructions."""

from enum import Enum
from typing import Tuple

from pydantic import BaseModel, ConfigDict, model_validator

from ..exceptions import ParameterError
from .families import CrossPair, SubsetMask
from .matrices import RationalMatrix


class CanonicalParams(BaseModel):
    """Parameters (n, ℓ, κ, τ, n′) of a canonical extremal pair.

    Legal values satisfy κ ∈ {2ℓ−1, 2ℓ}, 0 ≤ τ ≤ κ and κ+τ ≤ n′ ≤ n.
    For ℓ = 0 only κ = τ = 0 is accepted; that case lies outside the
    classical theory and is flagged by :attr:`is_extension`.
    """

    model_config = ConfigDict(frozen=True)

    n: int
    ell: int
    kappa: int
    tau: int
    nprime: int

    @model_validator(mode="after")
    def check_legal(self) -> "CanonicalParams":
        if self.ell < 0:
            raise ParameterError("ell must be nonnegative", "ell", self.ell)
        if self.n < 1:
            raise ParameterError("n must be positive", "n", self.n)
        if self.ell == 0:
            if self.kappa != 0 or self.tau != 0:
                raise ParameterError(
                    "ell = 0 admits only kappa = tau = 0",
                    "kappa",
                    self.kappa,
                )
        elif self.kappa not in (2 * self.ell - 1, 2 * self.ell):
            raise ParameterError(
                f"kappa must be {2 * self.ell - 1} or {2 * self.ell}",
                "kappa",
                self.kappa,
            )
        if not 0 <= self.tau <= self.kappa:
            raise ParameterError(
                f"tau must lie in [0, {self.kappa}]", "tau", self.tau
            )
        if not self.kappa + self.tau <= self.nprime <= self.n:
            raise ParameterError(
                f"nprime must lie in [{self.kappa + self.tau}, {self.n}]",
                "nprime",
                self.nprime,
            )
        return self

    @property
    def is_extension(self) -> bool:
        return self.ell == 0

    @property
    def x_elements(self) -> Tuple[int, ...]:
        """Free elements on the A side: κ+τ+1 .. n′."""
        return tuple(range(self.kappa + self.tau + 1, self.nprime + 1))

    @property
    def y_elements(self) -> Tuple[int, ...]:
        """Free elements on the B side: n′+1 .. n."""
        return tuple(range(self.nprime + 1, self.n + 1))

    def sort_key(self) -> Tuple[int, int, int]:
        """Order used when several parameter tuples match a pair."""
        return (-self.kappa, self.tau, self.nprime)


class MatrixVariant(str, Enum):
    """The three matrix-based families."""

    OMEGA = "omega"
    O_FAMILY_1 = "o1"
    O_FAMILY_2 = "o2"


class MatrixFamilySpec(BaseModel):
    """A pair of generator matrices with the base set B₁ of the B side.

    :param variant: Which family the matrices belong to
    :param n: Ground-set size
    :param ell: Target intersection size
    :param k: Rank of the A generator
    :param h: Rank of the B generator, k + h = n
    :param m_a: k×n generator of the A side
    :param m_b: h×n generator of the B side
    :param b1: Initial B set as a mask
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    variant: MatrixVariant
    n: int
    ell: int
    k: int
    h: int
    m_a: RationalMatrix
    m_b: RationalMatrix
    b1: SubsetMask = 0

    @model_validator(mode="after")
    def check_shapes(self) -> "MatrixFamilySpec":
        if self.k + self.h != self.n:
            raise ParameterError(
                f"k + h must equal n ({self.k} + {self.h} != {self.n})",
                "h",
                self.h,
            )
        if self.m_a.shape != (self.k, self.n):
            raise ParameterError(
                f"M_A must be {self.k}x{self.n}", "m_a", self.m_a.shape
            )
        if self.m_b.shape != (self.h, self.n):
            raise ParameterError(
                f"M_B must be {self.h}x{self.n}", "m_b", self.m_b.shape
            )
        return self


class MatrixFamily(BaseModel):
    """A matrix family together with its expanded cross pair."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    spec: MatrixFamilySpec
    pair: CrossPair
