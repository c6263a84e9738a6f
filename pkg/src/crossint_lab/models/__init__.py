"""Domain and report models for crossint-lab."""

from .bounds import IntervalUnion
from .families import (
    MAX_GROUND_SET,
    CrossPair,
    Family,
    ReductionTrace,
    SubsetMask,
    elements_of,
    mask_of,
    submasks,
)
from .matrices import RationalMatrix
from .params import (
    CanonicalParams,
    MatrixFamily,
    MatrixFamilySpec,
    MatrixVariant,
)
from .search import (
    ClassificationResult,
    OptimaReport,
    SearchConfig,
    SearchReport,
)
from .spectra import EchelonForm, RowClassification

__all__ = [
    "MAX_GROUND_SET",
    "CanonicalParams",
    "ClassificationResult",
    "CrossPair",
    "EchelonForm",
    "Family",
    "IntervalUnion",
    "MatrixFamily",
    "MatrixFamilySpec",
    "MatrixVariant",
    "OptimaReport",
    "RationalMatrix",
    "ReductionTrace",
    "RowClassification",
    "SearchConfig",
    "SearchReport",
    "SubsetMask",
    "elements_of",
    "mask_of",
    "submasks",
]
