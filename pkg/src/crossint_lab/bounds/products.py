"""Bounds on the maximum product P_ℓ(n)."""

from math import comb, sqrt
from typing import Optional

from ..exceptions import ParameterError


def frankl_rodl_bound(n: int, ell: int) -> int:
    """2^n for ℓ = 0, otherwise 2^{n−1}."""
    if n < 1:
        raise ParameterError("n must be positive", "n", n)
    return 2**n if ell == 0 else 2 ** (n - 1)


def conjectured_max(n: int, ell: int) -> int:
    """C(2ℓ, ℓ)·2^{n−2ℓ}, the value of the extremal constructions.

    :raises ParameterError: If n < 2ℓ
    """
    if ell < 0 or n < 2 * ell:
        raise ParameterError(
            f"conjectured_max needs 0 <= 2*ell <= n, got n={n}, ell={ell}",
            "n",
            n,
        )
    return comb(2 * ell, ell) * 2 ** (n - 2 * ell)


def construction_lower_bound(n: int, ell: int) -> int:
    """Best product reached by an explicit construction.

    Below n = 2ℓ a single pair A = B = {[ℓ]} still gives 1 when ℓ ≤ n.
    """
    if n >= 2 * ell:
        return conjectured_max(n, ell)
    return 1 if 0 <= ell <= n else 0


def known_upper_bound(n: int, ell: int) -> int:
    """Best proven upper bound: 2^n, 2^{n−1}, or 3·2^{n−3} for ℓ = 2."""
    if ell == 2 and n >= 4:
        return 3 * 2 ** (n - 3)
    return frankl_rodl_bound(n, ell)


def theorem_backed_value(n: int, ell: int) -> Optional[int]:
    """Exact P_ℓ(n) where the proven bounds meet, otherwise None."""
    if n < 1 or ell < 0 or n < 2 * ell:
        return None
    lower = conjectured_max(n, ell)
    return lower if lower == known_upper_bound(n, ell) else None


def weak_constant_bound(n: int, ell: int) -> float:
    """2^{n+3}/√ℓ, for numeric comparison only."""
    if ell < 1:
        raise ParameterError("ell must be positive", "ell", ell)
    return 2 ** (n + 3) / sqrt(ell)


def span_constant_bound(k: int, h: int, n: int) -> float:
    """2^{k+h+3}/√n, for numeric comparison only."""
    if n < 1:
        raise ParameterError("n must be positive", "n", n)
    return 2 ** (k + h + 3) / sqrt(n)
