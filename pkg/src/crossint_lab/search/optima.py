"""All optimal pairs of a search, grouped up to relabeling and swap."""

import logging
from typing import List, Optional

from ..config.settings import Settings
from ..models.families import CrossPair
from ..models.search import OptimaReport, SearchConfig
from .classify import classify_extremal, is_isomorphic_pair
from .engine import max_product

logger = logging.getLogger(__name__)


def enumerate_optima(
    n: int,
    ell: int,
    config: Optional[SearchConfig] = None,
    settings: Optional[Settings] = None,
) -> OptimaReport:
    """Find every optimum, deduplicate it and classify each class.

    Optima that match no canonical pair are kept in the report; nothing
    is asserted about uniqueness.
    """
    base = config or SearchConfig()
    report = max_product(
        n,
        ell,
        base.model_copy(update={"enumerate_all_optima": True}),
        settings,
    )
    classes: List[CrossPair] = []
    for witness in report.witnesses:
        if not any(is_isomorphic_pair(rep, witness) for rep in classes):
            classes.append(witness)
    results = [classify_extremal(rep) for rep in classes]
    unmatched = sum(1 for r in results if not r.matched)
    if unmatched:
        logger.warning(
            "%d of %d optimal classes for P_%d(%d) are not canonical",
            unmatched,
            len(classes),
            ell,
            n,
        )
    return OptimaReport(
        n=n,
        ell=ell,
        value=report.value,
        classes=tuple(classes),
        results=tuple(results),
    )
