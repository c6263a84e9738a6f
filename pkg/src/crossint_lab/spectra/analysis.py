"""Spans of characteristic vectors, orthogonality and duality."""

import logging
from typing import Optional, Tuple

from ..exceptions import ParameterError, PreconditionError
from ..models.families import CrossPair, Family, SubsetMask
from ..models.matrices import RationalMatrix
from ..models.spectra import EchelonForm
from .echelon import rref

logger = logging.getLogger(__name__)


def characteristic_vector(mask: SubsetMask, n: int) -> Tuple[int, ...]:
    """χ of a subset as a 0/1 tuple of length n."""
    return tuple((mask >> j) & 1 for j in range(n))


def char_matrix(f: Family) -> RationalMatrix:
    """Stack the characteristic vectors of ``f`` in canonical order.

    :raises PreconditionError: If ``f`` is empty
    """
    if not f.members:
        raise PreconditionError("char_matrix needs a nonempty family")
    return RationalMatrix(
        [characteristic_vector(m, f.n) for m in f.members], f.n
    )


def _resolve_b1(p: CrossPair, b1_index: Optional[int]) -> int:
    if not p.a.members or not p.b.members:
        raise PreconditionError(
            "Span dimensions need two nonempty families", "span_dims"
        )
    index = 0 if b1_index is None else b1_index
    if not 0 <= index < len(p.b):
        raise ParameterError(
            f"B1 index must lie in [0, {len(p.b) - 1}]", "b1_index", index
        )
    return index


def difference_matrix(
    p: CrossPair, b1_index: Optional[int] = None
) -> RationalMatrix:
    """Rows χ_B − χ_{B₁} for every B ≠ B₁, canonical order.

    B₁ defaults to the canonically smallest member of B.
    """
    index = _resolve_b1(p, b1_index)
    base = characteristic_vector(p.b.members[index], p.n)
    rows = [
        [x - y for x, y in zip(characteristic_vector(m, p.n), base)]
        for i, m in enumerate(p.b.members)
        if i != index
    ]
    return RationalMatrix(rows, p.n)


def span_dims(p: CrossPair, b1_index: Optional[int] = None) -> Tuple[int, int]:
    """Return (k, h): dimensions of the A span and the B difference span.

    For a cross-intersecting pair both spans are orthogonal, so k + h ≤ n.
    h does not depend on which B₁ is chosen.

    :param p: Pair with both families nonempty
    :param b1_index: Index of B₁ in ``p.b.members``
    :raises PreconditionError: If a family is empty
    :raises ParameterError: If ``b1_index`` is out of range
    """
    index = _resolve_b1(p, b1_index)
    k = rref(char_matrix(p.a)).rank
    h = rref(difference_matrix(p, index)).rank
    return k, h


def orthogonal(ma: RationalMatrix, mb_prime: RationalMatrix) -> bool:
    """True iff every row of ``ma`` is orthogonal to every row of ``mb_prime``.

    :raises PreconditionError: If both matrices have rows but different
        column counts
    """
    if not ma.nrows or not mb_prime.nrows:
        return True
    if ma.ncols != mb_prime.ncols:
        raise PreconditionError(
            f"Column counts differ ({ma.ncols} vs {mb_prime.ncols})",
            "orthogonal",
        )
    for r in ma.rows:
        for s in mb_prime.rows:
            if sum(x * y for x, y in zip(r, s)) != 0:
                return False
    return True


def aligned_echelon_pair(
    ma: RationalMatrix, mb: RationalMatrix
) -> Tuple[EchelonForm, EchelonForm]:
    """Echelon forms of both sides under one shared column order.

    A is reduced with pivots moved to the front, giving (I_k | *). B is
    reduced scanning the remaining columns first, so that under the same
    column order it reads (* | I_h) whenever k + h = n.
    """
    form_a = rref(ma, allow_col_perm=True)
    perm = form_a.col_perm
    k = form_a.rank
    form_b = rref(mb, column_order=perm[k:] + perm[:k])
    return form_a, form_b.model_copy(update={"col_perm": perm})


def _is_identity_block(
    m: RationalMatrix, first_col: int, size: int
) -> bool:
    return all(
        m[i, first_col + j] == (1 if i == j else 0)
        for i in range(size)
        for j in range(size)
    )


def duality_check(ma: EchelonForm, mb: EchelonForm) -> bool:
    """Check (M_A)_{i,k+j} = −(M_B)_{j,i} under the shared column order.

    :param ma: Echelon form of the A span, (I_k | *) after ``col_perm``
    :param mb: Echelon form of the B difference span, (* | I_h) under the
        same ``col_perm``
    :return: True iff the identity holds for all i ∈ [k], j ∈ [h]
    :raises PreconditionError: If the shapes or column orders disagree
    """
    n = ma.ncols
    k, h = ma.rank, mb.rank
    if mb.ncols != n or k + h != n:
        raise PreconditionError(
            f"duality needs k + h = n, got {k} + {h} vs {n}",
            "duality_check",
        )
    if ma.col_perm != mb.col_perm:
        raise PreconditionError(
            "Echelon forms use different column orders", "duality_check"
        )
    pa = ma.permuted()
    pb = mb.permuted()
    if not _is_identity_block(pa, 0, k) or not _is_identity_block(pb, k, h):
        raise PreconditionError(
            "Expected (I_k | *) and (* | I_h) shapes", "duality_check"
        )
    return all(
        pa[i, k + j] == -pb[j, i] for i in range(k) for j in range(h)
    )
