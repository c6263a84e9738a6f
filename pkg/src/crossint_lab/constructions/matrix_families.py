"""Matrix-defined optimal families and their expansion into pairs.

Each variant is given by a generator M_A of the A span and a generator M_B
of the B difference span, plus a base set B₁. Columns below are 1-based.

omega (k ∈ {2ℓ−1, 2ℓ}, h = n − k, 1 ≤ h ≤ k)::

    M_A = ( I_h  0        I_h )      M_B = ( −I_h  0  I_h )
          ( 0    I_{k−h}  0   )      B₁  = [k]

o1 (columns 1..k−1, the middle column k, then k+1..2k−1, and an optional
column 2k; h ∈ {k−1, k})::

    M_A rows  e_i − e_{k+i} (i < k),  e_k + Σ_{k<j<2k} e_j [+ e_{2k}]
    M_B rows  e_i − e_k + e_{k+i} (i < k) [, −e_k + e_{2k}]

o2 (columns 1..k−2, a = k−1, b = k, then k+1..2k−2 and up to two
optional columns c = 2k−1, d = 2k; h = k − 2 + #optional)::

    M_A rows  e_i − e_{k+i} (i ≤ k−2),
              e_a + Σ_{k<j≤2k−2} e_j [+ e_c] [+ e_d],  likewise for e_b
    M_B rows  e_i − e_a − e_b + e_{k+i} (i ≤ k−2)
              [, −e_a − e_b + e_c] [, −e_a − e_b + e_d]

Both o-families use B₁ = {i, k+i : i ≤ ℓ} and need h ∈ {2ℓ−2, 2ℓ−1}.
"""

import logging
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from ..exceptions import ParameterError
from ..models.families import CrossPair, Family, SubsetMask
from ..models.matrices import RationalMatrix
from ..models.params import MatrixFamily, MatrixFamilySpec, MatrixVariant
from ..models.spectra import EchelonForm
from ..spectra.echelon import rref

logger = logging.getLogger(__name__)


def _vector(n: int, entries: Dict[int, int]) -> List[int]:
    """Row of length n from {1-based column: value}."""
    row = [0] * n
    for col, value in entries.items():
        row[col - 1] += value
    return row


def _b1_pairs(k: int, ell: int) -> SubsetMask:
    mask = 0
    for i in range(1, ell + 1):
        mask |= (1 << (i - 1)) | (1 << (k + i - 1))
    return mask


def _omega_legal(ell: int, n: int, k: int) -> bool:
    h = n - k
    return ell >= 1 and k in (2 * ell - 1, 2 * ell) and 1 <= h <= k


def _o1_legal(ell: int, n: int, k: int) -> bool:
    h = n - k
    return (
        ell >= 1
        and h in (k - 1, k)
        and h in (2 * ell - 2, 2 * ell - 1)
        and h >= 1
        and ell <= k - 1
    )


def _o2_legal(ell: int, n: int, k: int) -> bool:
    h = n - k
    optional = n - 2 * k + 2
    return (
        ell >= 1
        and optional in (0, 1, 2)
        and h in (2 * ell - 2, 2 * ell - 1)
        and h >= 1
        and ell <= k - 2
    )


_LEGAL = {
    MatrixVariant.OMEGA: _omega_legal,
    MatrixVariant.O_FAMILY_1: _o1_legal,
    MatrixVariant.O_FAMILY_2: _o2_legal,
}


def legal_ks(variant: MatrixVariant, ell: int, n: int) -> List[int]:
    """Legal ranks k for the variant at (ℓ, n), largest first."""
    check = _LEGAL[MatrixVariant(variant)]
    return [k for k in range(n, 0, -1) if check(ell, n, k)]


def _omega_rows(
    n: int, k: int
) -> Tuple[List[List[int]], List[List[int]], SubsetMask]:
    h = n - k
    m_a = [_vector(n, {i: 1, k + i: 1}) for i in range(1, h + 1)]
    m_a += [_vector(n, {h + j: 1}) for j in range(1, k - h + 1)]
    m_b = [_vector(n, {i: -1, k + i: 1}) for i in range(1, h + 1)]
    return m_a, m_b, (1 << k) - 1


def _o1_rows(
    n: int, k: int
) -> Tuple[List[List[int]], List[List[int]], SubsetMask]:
    has_optional = n == 2 * k
    m_a = [_vector(n, {i: 1, k + i: -1}) for i in range(1, k)]
    last = {k: 1}
    last.update({j: 1 for j in range(k + 1, 2 * k)})
    if has_optional:
        last[2 * k] = 1
    m_a.append(_vector(n, last))
    m_b = [_vector(n, {i: 1, k: -1, k + i: 1}) for i in range(1, k)]
    if has_optional:
        m_b.append(_vector(n, {k: -1, 2 * k: 1}))
    return m_a, m_b, 0


def _o2_rows(
    n: int, k: int
) -> Tuple[List[List[int]], List[List[int]], SubsetMask]:
    optional_cols = list(range(2 * k - 1, n + 1))
    a, b = k - 1, k
    m_a = [_vector(n, {i: 1, k + i: -1}) for i in range(1, k - 1)]
    tail = {j: 1 for j in range(k + 1, 2 * k - 1)}
    tail.update({c: 1 for c in optional_cols})
    m_a.append(_vector(n, {a: 1, **tail}))
    m_a.append(_vector(n, {b: 1, **tail}))
    m_b = [
        _vector(n, {i: 1, a: -1, b: -1, k + i: 1}) for i in range(1, k - 1)
    ]
    m_b += [_vector(n, {a: -1, b: -1, c: 1}) for c in optional_cols]
    return m_a, m_b, 0


def matrix_pair_spec(
    variant: MatrixVariant, ell: int, n: int, k: Optional[int] = None
) -> MatrixFamilySpec:
    """Emit the generator matrices of a matrix family.

    :param variant: ``omega``, ``o1`` or ``o2``
    :param ell: Target intersection size, ℓ ≥ 1
    :param n: Ground-set size
    :param k: Rank of M_A; defaults to the largest legal value
    :return: The MatrixFamilySpec holding M_A, M_B and B₁
    :raises ParameterError: If no legal instance exists for the input
    """
    variant = MatrixVariant(variant)
    candidates = legal_ks(variant, ell, n)
    if k is None:
        if not candidates:
            raise ParameterError(
                f"No legal {variant.value} instance for ell={ell}, n={n}",
                "n",
                n,
            )
        k = candidates[0]
    elif k not in candidates:
        raise ParameterError(
            f"k={k} is not legal for {variant.value} at ell={ell}, n={n}",
            "k",
            k,
        )

    if variant is MatrixVariant.OMEGA:
        m_a, m_b, b1 = _omega_rows(n, k)
    elif variant is MatrixVariant.O_FAMILY_1:
        m_a, m_b, _ = _o1_rows(n, k)
        b1 = _b1_pairs(k, ell)
    else:
        m_a, m_b, _ = _o2_rows(n, k)
        b1 = _b1_pairs(k, ell)
    return MatrixFamilySpec(
        variant=variant,
        n=n,
        ell=ell,
        k=k,
        h=n - k,
        m_a=RationalMatrix(m_a, n),
        m_b=RationalMatrix(m_b, n),
        b1=b1,
    )


def legal_matrix_sizes(
    variant: MatrixVariant, ell_max: int, n_max: int
) -> List[Tuple[int, int, int]]:
    """Legal (ℓ, n, k) triples up to the given limits, smallest n first."""
    out = [
        (ell, n, k)
        for ell in range(1, ell_max + 1)
        for n in range(1, n_max + 1)
        for k in legal_ks(variant, ell, n)
    ]
    return sorted(out, key=lambda t: (t[1], t[0], t[2]))


def _lattice_points(
    form: EchelonForm, base: Sequence[int], n: int
) -> List[SubsetMask]:
    """0/1 points of base + rowspace(form.matrix).

    At pivot column p_i the point has coordinate base[p_i] + c_i, so each
    row admits exactly two coefficients.
    """
    rows = form.matrix.rows
    choices = [
        (-base[p], 1 - base[p]) for p in form.pivot_cols
    ]
    points: List[SubsetMask] = []
    for coefficients in product(*choices):
        vector = list(base)
        for c, row in zip(coefficients, rows):
            if c:
                for j in range(n):
                    vector[j] += c * row[j]
        if all(x == 0 or x == 1 for x in vector):
            points.append(sum(1 << j for j in range(n) if vector[j] == 1))
    return points


def _filter(
    first: List[SubsetMask], second: List[SubsetMask], ell: int
) -> Tuple[List[SubsetMask], List[SubsetMask]]:
    kept_first = [
        x for x in first if all((x & y).bit_count() == ell for y in second)
    ]
    kept_second = [
        y
        for y in second
        if all((x & y).bit_count() == ell for x in kept_first)
    ]
    return kept_first, kept_second


def _full_row_rank(m: RationalMatrix, name: str) -> EchelonForm:
    form = rref(m)
    if form.rank != m.nrows:
        raise ParameterError(
            f"{name} is rank deficient (rank {form.rank} < {m.nrows} rows)",
            name,
            form.rank,
        )
    return form


def expand_matrix_pair(
    m_a: RationalMatrix,
    m_b: RationalMatrix,
    b1: SubsetMask,
    ell: int,
    n: Optional[int] = None,
) -> CrossPair:
    """Expand generator matrices into the maximal ℓ-cross-intersecting pair.

    A collects the 0/1 points of rowspace(M_A), B the 0/1 points of
    χ_{B₁} + rowspace(M_B). The raw sides are then filtered in both
    orders (A against raw B, then B against the kept A, and the mirror
    image); the larger product wins, A first on ties.

    :param m_a: Generator of the A span, full row rank
    :param m_b: Generator of the B difference span, full row rank (may
        have no rows)
    :param b1: Base set of the B side
    :param ell: Target intersection size
    :param n: Ground-set size; defaults to the column count of M_A
    :raises ParameterError: On rank-deficient input or mismatched widths
    """
    n = m_a.ncols if n is None else n
    if m_a.ncols != n or (m_b.nrows and m_b.ncols != n):
        raise ParameterError("Matrix widths must equal n", "n", n)
    form_a = _full_row_rank(m_a, "m_a")
    form_b = _full_row_rank(m_b, "m_b")

    raw_a = _lattice_points(form_a, [0] * n, n)
    base = [(b1 >> j) & 1 for j in range(n)]
    raw_b = _lattice_points(form_b, base, n)

    a_first, b_after = _filter(raw_a, raw_b, ell)
    b_first, a_after = _filter(raw_b, raw_a, ell)
    if len(a_first) * len(b_after) >= len(a_after) * len(b_first):
        a, b = a_first, b_after
    else:
        a, b = a_after, b_first
    pair = CrossPair.build(
        Family.of(n, a), Family.of(n, b), ell, verified=True
    )
    logger.debug(
        "Expanded %d/%d raw points to |A|=%d, |B|=%d",
        len(raw_a),
        len(raw_b),
        len(a),
        len(b),
    )
    return pair


def matrix_family(
    variant: MatrixVariant, ell: int, n: int, k: Optional[int] = None
) -> MatrixFamily:
    """Build a matrix family and expand it in one step."""
    spec = matrix_pair_spec(variant, ell, n, k)
    pair = expand_matrix_pair(spec.m_a, spec.m_b, spec.b1, ell, n)
    return MatrixFamily(spec=spec, pair=pair)
